#pragma once

#include <vector>

#include "enact/company.hpp"
#include "enact/document.hpp"
#include "enact/findings.hpp"
#include "enact/lints.hpp"

namespace enact {

struct AssessmentResult {
    PortfolioSummary summary;
    std::vector<Finding> findings;
    // False when an error finding stopped the run before the effect stages;
    // the summary then carries no numbers.
    bool completed = false;
};

/// Stages 1-2 only: perspective, eligibility and structural rule checks.
std::vector<Finding> validate_portfolio(const Portfolio& portfolio,
                                        const OutputOptions& options);

/// The full five-stage run: perspective, eligibility, per-service and joint
/// effects, allocation, company aggregation. A failing stage prevents all
/// later stages. Data that defeats the calculus itself (effects exceeding
/// footprints, indeterminate shares) throws.
AssessmentResult run_assessment(const Portfolio& portfolio, const OutputOptions& options);

/// Resolves one service-on-activity effect declaration to a value.
SingleServiceResult resolve_effect(const Portfolio& portfolio, const ICTService& service,
                                   const ServiceActivityEffect& effect);

}  // namespace enact
