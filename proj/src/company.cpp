#include "enact/company.hpp"

#include <algorithm>

#include "enact/errors.hpp"

namespace enact {

std::vector<CompanyReport> aggregate_company(
    const Portfolio& portfolio, const std::vector<ServiceActivityAllocation>& allocations) {
    std::vector<CompanyReport> reports;
    reports.reserve(portfolio.companies.size());

    for (const auto& company : portfolio.companies) {
        CompanyReport report;
        report.company_id = company.id;
        report.perspective = portfolio.perspective;

        // Double summation over services and activities via their
        // allocation cells; Effect addition enforces the single
        // perspective.
        Effect a_total{0.0, portfolio.perspective};
        Effect b_total{0.0, portfolio.perspective};
        for (const auto& alloc : allocations) {
            const double a = alloc.company_claim_kg(company.id, Level::A);
            const double b = alloc.company_claim_kg(company.id, Level::B);
            if (a != 0.0 || b != 0.0) {
                a_total += Effect{a, portfolio.perspective};
                b_total += Effect{b, portfolio.perspective};
                report.per_cell.push_back({alloc.service_id, alloc.activity_id, a, b});
            }
            if (std::find(alloc.c_claimants.begin(), alloc.c_claimants.end(), company.id) !=
                alloc.c_claimants.end()) {
                report.c_claims.push_back(
                    {alloc.service_id, alloc.activity_id, alloc.e_star_kg});
            }
        }
        report.a_total_kg = a_total.kg;
        report.b_total_kg = b_total.kg;
        reports.push_back(std::move(report));
    }

    std::sort(reports.begin(), reports.end(),
              [](const CompanyReport& a, const CompanyReport& b) {
                  return a.company_id < b.company_id;
              });
    return reports;
}

PortfolioSummary portfolio_summary(const Portfolio& portfolio,
                                   const TotalEffectResult& totals,
                                   std::vector<SingleServiceResult> singles,
                                   std::vector<ServiceActivityAllocation> allocations) {
    PortfolioSummary summary;
    summary.perspective = portfolio.perspective;
    summary.total_effect_kg = totals.total_kg;
    summary.per_activity = totals.per_activity;
    summary.single_service_results = std::move(singles);
    summary.companies = aggregate_company(portfolio, allocations);
    summary.allocations = std::move(allocations);
    return summary;
}

}  // namespace enact
