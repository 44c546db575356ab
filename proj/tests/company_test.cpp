#include <doctest.h>

#include <algorithm>
#include <random>

#include "enact/company.hpp"

using namespace enact;

namespace {

Portfolio two_service_portfolio() {
    Portfolio p;
    p.perspective = Perspective::Present;
    p.activities.push_back({"a1", "", {100, Unit::KgCO2e}, {}, {}, {}});
    p.activities.push_back({"a2", "", {100, Unit::KgCO2e}, {}, {}, {}});

    ICTService s1;
    s1.id = "s1";
    ICTService s2;
    s2.id = "s2";
    p.services = {s1, s2};

    Company x;
    x.id = "x";
    x.contributions.push_back({"x", "s1", Level::A, {Role::Developer, Role::Operator}, {}});
    x.contributions.push_back({"x", "s2", Level::A, {Role::Developer}, {}});
    Company y;
    y.id = "y";
    y.contributions.push_back(
        {"y", "s1", Level::A, {Role::Innovator, Role::Owner}, {}});
    y.contributions.push_back({"y", "s1", Level::C, {}, {}});
    p.companies = {x, y};
    return p;
}

std::vector<ServiceActivityAllocation> allocations_for(const Portfolio& p,
                                                       double e_s1_a1, double e_s2_a2) {
    std::vector<CompanyContribution> contributions;
    for (const auto& c : p.companies) {
        contributions.insert(contributions.end(), c.contributions.begin(),
                             c.contributions.end());
    }
    return {
        allocate_service_activity(*p.find_service("s1"), "a1", e_s1_a1, contributions),
        allocate_service_activity(*p.find_service("s2"), "a2", e_s2_a2, contributions),
    };
}

}  // namespace

TEST_CASE("per-company rollup across services and activities") {
    auto p = two_service_portfolio();
    auto reports = aggregate_company(p, allocations_for(p, 44.0, 40.0));
    REQUIRE(reports.size() == 2);

    const auto& x = reports[0];
    CHECK(x.company_id == "x");
    // DE+OP on s1 (11 + 11) plus DE on s2 (10)
    CHECK(approx_equal(x.a_total_kg, 32.0));
    CHECK(x.b_total_kg == 0.0);
    CHECK(x.c_claims.empty());

    const auto& y = reports[1];
    CHECK(y.company_id == "y");
    CHECK(approx_equal(y.a_total_kg, 22.0));
    REQUIRE(y.c_claims.size() == 1);
    CHECK(y.c_claims[0].service_id == "s1");
    CHECK(y.c_claims[0].effect_kg == 44.0);
}

TEST_CASE("company with no contributions reports zeros") {
    auto p = two_service_portfolio();
    Company idle;
    idle.id = "idle";
    p.companies.push_back(idle);
    auto reports = aggregate_company(p, allocations_for(p, 44.0, 40.0));
    auto it = std::find_if(reports.begin(), reports.end(),
                           [](const CompanyReport& r) { return r.company_id == "idle"; });
    REQUIRE(it != reports.end());
    CHECK(it->a_total_kg == 0.0);
    CHECK(it->b_total_kg == 0.0);
    CHECK(it->c_claims.empty());
    CHECK(it->per_cell.empty());
}

TEST_CASE("companies splitting all slots of one service conserve its share") {
    Portfolio p;
    p.perspective = Perspective::Present;
    p.activities.push_back({"a1", "", {100, Unit::KgCO2e}, {}, {}, {}});
    ICTService s;
    s.id = "s1";
    p.services = {s};
    Company x;
    x.id = "x";
    x.contributions.push_back({"x", "s1", Level::A, {Role::Innovator, Role::Developer}, {}});
    Company y;
    y.id = "y";
    y.contributions.push_back({"y", "s1", Level::A, {Role::Owner, Role::Operator}, {}});
    p.companies = {x, y};

    std::vector<CompanyContribution> contributions;
    for (const auto& c : p.companies) {
        contributions.insert(contributions.end(), c.contributions.begin(),
                             c.contributions.end());
    }
    auto alloc = allocate_service_activity(*p.find_service("s1"), "a1", 44.0, contributions);
    auto reports = aggregate_company(p, {alloc});
    CHECK(approx_equal(reports[0].a_total_kg + reports[1].a_total_kg, 44.0));
}

TEST_CASE("conservation across all companies plus unallocated equals the share sum") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> e_dist(0.0, 1e4);
    auto p = two_service_portfolio();
    for (int iter = 0; iter < 100; ++iter) {
        const double e1 = e_dist(rng);
        const double e2 = e_dist(rng);
        auto allocs = allocations_for(p, e1, e2);
        auto reports = aggregate_company(p, allocs);
        double claimed = 0.0;
        for (const auto& r : reports) claimed += r.a_total_kg;
        double unclaimed = 0.0;
        for (const auto& a : allocs) unclaimed += a.a_unclaimed_kg();
        CHECK(approx_equal(claimed + unclaimed, e1 + e2));
    }
}

TEST_CASE("aggregation is invariant under allocation order") {
    auto p = two_service_portfolio();
    auto allocs = allocations_for(p, 44.0, 40.0);
    auto reports_fwd = aggregate_company(p, allocs);
    std::reverse(allocs.begin(), allocs.end());
    auto reports_rev = aggregate_company(p, allocs);
    REQUIRE(reports_fwd.size() == reports_rev.size());
    for (std::size_t i = 0; i < reports_fwd.size(); ++i) {
        CHECK(reports_fwd[i].company_id == reports_rev[i].company_id);
        CHECK(reports_fwd[i].a_total_kg == reports_rev[i].a_total_kg);
        CHECK(reports_fwd[i].b_total_kg == reports_rev[i].b_total_kg);
    }
}
