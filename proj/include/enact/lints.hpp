#pragma once

#include <string>
#include <vector>

#include "enact/allocation.hpp"
#include "enact/findings.hpp"
#include "enact/model.hpp"
#include "enact/multi_service.hpp"
#include "enact/single_service.hpp"

namespace enact {

/// Services entering the computation must declare ICT as key enabler and
/// must not be embedded-only systems.
std::vector<Finding> check_service_eligibility(const ICTService& service);

/// Pre-computation scan for role slots claimed by more than one company.
std::vector<Finding> check_role_claims(const Portfolio& portfolio);

/// Notes every activity modified by several services (residual composition
/// applied) and flags supplied joint values that exceed the composed value,
/// the signature of naive summation.
std::vector<Finding> check_shared_activity_composition(
    const Portfolio& portfolio, const std::vector<JointActivityResult>& joints);

/// Rejects output requests for cross-level (A+B, A+C, B+C) totals.
std::vector<Finding> check_level_mixing(const std::vector<std::string>& requested_sections);

/// Post-allocation audit: claimed plus unclaimed shares must equal the
/// service share at A- and at B-level; partially claimed cells get a note.
std::vector<Finding> check_hundred_percent_rule(
    const std::vector<ServiceActivityAllocation>& allocations);

/// Notes the overstatement avoided for every case study with rebound.
std::vector<Finding> lint_rebound_overstatement(
    const std::vector<SingleServiceResult>& results);

/// Warns about net-harmful (negative) resolved effects.
std::vector<Finding> lint_negative_effects(const std::vector<SingleServiceResult>& results);

}  // namespace enact
