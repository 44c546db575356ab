#pragma once

#include <span>
#include <string>
#include <vector>

#include "enact/quantity.hpp"

namespace enact {

/// Joint effect of the services modifying one activity, with each
/// service's proportional share and the naive sum kept for transparency.
struct JointActivityResult {
    std::string activity_id;
    double footprint_kg = 0.0;
    double joint_effect_kg = 0.0;
    double naive_sum_kg = 0.0;
    std::vector<std::string> service_ids;  // parallel to shares / effects
    std::vector<double> effects_kg;        // individual effects
    std::vector<double> shares_kg;         // proportional shares of the joint effect
};

/// Residual-footprint composition: the services in turn each remove their
/// fractional reduction from what remains of the activity's footprint.
double joint_effect(double footprint_kg, std::span<const double> effects_kg);

/// Splits the joint effect across services proportionally to their
/// individual effects. All-zero effects yield all-zero shares.
std::vector<double> service_shares(double footprint_kg, std::span<const double> effects_kg);

struct EffectCell {
    std::string service_id;
    std::string activity_id;
    double effect_kg = 0.0;
};

struct ActivityFootprint {
    std::string activity_id;
    double footprint_kg = 0.0;
};

struct TotalEffectResult {
    double total_kg = 0.0;
    std::vector<JointActivityResult> per_activity;  // in activity input order
};

/// Per-activity joint effects and shares plus the grand total. The total is
/// formed by summing shares, cross-checked against the direct per-activity
/// composition.
TotalEffectResult total_effect(std::span<const ActivityFootprint> activities,
                               std::span<const EffectCell> cells);

}  // namespace enact
