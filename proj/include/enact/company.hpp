#pragma once

#include <string>
#include <vector>

#include "enact/allocation.hpp"
#include "enact/multi_service.hpp"
#include "enact/single_service.hpp"

namespace enact {

/// A company's rolled-up effects. A- and B-level totals are conserved
/// sums; C-level stays an itemized list and is never collapsed into a
/// scalar, and no cross-level total exists anywhere.
struct CompanyReport {
    std::string company_id;
    Perspective perspective = Perspective::Present;
    double a_total_kg = 0.0;
    double b_total_kg = 0.0;

    struct CellClaim {
        std::string service_id;
        std::string activity_id;
        double a_kg = 0.0;
        double b_kg = 0.0;
    };
    std::vector<CellClaim> per_cell;  // cells the company touches at A/B level

    struct CClaim {
        std::string service_id;
        std::string activity_id;
        double effect_kg = 0.0;
    };
    std::vector<CClaim> c_claims;
};

/// Per-company rollup across all services and activities. All allocations
/// must share one time perspective.
std::vector<CompanyReport> aggregate_company(
    const Portfolio& portfolio, const std::vector<ServiceActivityAllocation>& allocations);

/// Everything the report emitters need, assembled after all stages.
struct PortfolioSummary {
    Perspective perspective = Perspective::Present;
    double total_effect_kg = 0.0;
    std::vector<JointActivityResult> per_activity;
    std::vector<SingleServiceResult> single_service_results;
    std::vector<ServiceActivityAllocation> allocations;
    std::vector<CompanyReport> companies;
};

PortfolioSummary portfolio_summary(const Portfolio& portfolio,
                                   const TotalEffectResult& totals,
                                   std::vector<SingleServiceResult> singles,
                                   std::vector<ServiceActivityAllocation> allocations);

}  // namespace enact
