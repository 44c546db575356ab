#include "enact/allocation.hpp"

#include <algorithm>
#include <cmath>

#include "enact/errors.hpp"

namespace enact {

namespace {

constexpr std::size_t role_index(Role r) { return static_cast<std::size_t>(r); }

std::vector<double> block_weights(const std::vector<BuildingBlock>& blocks) {
    const std::size_t n = blocks.size();
    const bool any_weighted =
        std::any_of(blocks.begin(), blocks.end(),
                    [](const BuildingBlock& b) { return b.weight.has_value(); });
    if (!any_weighted) {
        return std::vector<double>(n, 1.0 / static_cast<double>(n));
    }
    std::vector<double> weights;
    weights.reserve(n);
    double sum = 0.0;
    for (const auto& b : blocks) {
        if (!b.weight) {
            throw InputError("building block '" + b.id +
                             "' lacks a weight while sibling blocks carry one");
        }
        if (*b.weight < 0.0) {
            throw InputError("building block '" + b.id + "' has a negative weight");
        }
        weights.push_back(*b.weight);
        sum += *b.weight;
    }
    if (!approx_equal(sum, 1.0)) {
        throw InputError("building-block weights sum to " + std::to_string(sum) +
                         ", expected 1");
    }
    return weights;
}

}  // namespace

std::array<double, 4> a_level_role_shares(double e_star_kg) {
    const double quarter = e_star_kg / 4.0;
    return {quarter, quarter, quarter, quarter};
}

std::vector<BlockRoleShare> b_level_slot_shares(double e_star_kg,
                                                const std::vector<BuildingBlock>& blocks) {
    if (blocks.empty()) {
        throw InputError("B-level allocation requested with no building blocks");
    }
    const auto weights = block_weights(blocks);
    std::vector<BlockRoleShare> shares;
    shares.reserve(blocks.size());
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        BlockRoleShare s;
        s.block_id = blocks[j].id;
        const double per_role = weights[j] * e_star_kg / 4.0;
        s.role_shares_kg = {per_role, per_role, per_role, per_role};
        shares.push_back(std::move(s));
    }
    return shares;
}

RoleResolution resolve_roles(const std::vector<RoleClaim>& claims, bool innovator_identified) {
    RoleResolution res;
    for (const auto& claim : claims) {
        auto& slot = res.company[role_index(claim.role)];
        if (slot && *slot != claim.company_id) {
            throw ConsistencyError("role " + std::string(role_tag(claim.role)) +
                                   " claimed by both '" + *slot + "' and '" +
                                   claim.company_id + "'");
        }
        slot = claim.company_id;
    }
    auto& innovator = res.company[role_index(Role::Innovator)];
    const auto& developer = res.company[role_index(Role::Developer)];
    if (!innovator_identified && !innovator && developer) {
        innovator = developer;
    }
    return res;
}

double ServiceActivityAllocation::a_claimed_kg() const {
    double sum = 0.0;
    for (const auto& s : a_slots)
        if (s.company_id) sum += s.amount_kg;
    return sum;
}

double ServiceActivityAllocation::a_unclaimed_kg() const {
    double sum = 0.0;
    for (const auto& s : a_slots)
        if (!s.company_id) sum += s.amount_kg;
    return sum;
}

double ServiceActivityAllocation::b_claimed_kg() const {
    double sum = 0.0;
    for (const auto& s : b_slots)
        if (s.company_id) sum += s.amount_kg;
    return sum;
}

double ServiceActivityAllocation::b_unclaimed_kg() const {
    double sum = 0.0;
    for (const auto& s : b_slots)
        if (!s.company_id) sum += s.amount_kg;
    return sum;
}

double ServiceActivityAllocation::company_claim_kg(const std::string& company_id,
                                                   Level level) const {
    double sum = 0.0;
    switch (level) {
        case Level::A:
            for (const auto& s : a_slots)
                if (s.company_id == company_id) sum += s.amount_kg;
            break;
        case Level::B:
            for (const auto& s : b_slots)
                if (s.company_id == company_id) sum += s.amount_kg;
            break;
        case Level::C:
            // Non-conserving; use c_claimants directly.
            for (const auto& c : c_claimants)
                if (c == company_id) return e_star_kg;
            break;
    }
    return sum;
}

ServiceActivityAllocation allocate_service_activity(
    const ICTService& service, const std::string& activity_id, double e_star_kg,
    const std::vector<CompanyContribution>& contributions) {
    ServiceActivityAllocation alloc;
    alloc.service_id = service.id;
    alloc.activity_id = activity_id;
    alloc.e_star_kg = e_star_kg;

    // A-level
    std::vector<RoleClaim> a_claims;
    for (const auto& c : contributions) {
        if (c.service_id != service.id || c.level != Level::A) continue;
        for (Role r : c.roles) a_claims.push_back({r, c.company_id});
    }
    const auto a_resolution = resolve_roles(a_claims, service.innovator_identified);
    const auto quarters = a_level_role_shares(e_star_kg);
    for (std::size_t i = 0; i < kAllRoles.size(); ++i) {
        alloc.a_slots.push_back({kAllRoles[i], quarters[i], a_resolution.company[i]});
    }

    // B-level
    const bool has_b_contributions =
        std::any_of(contributions.begin(), contributions.end(),
                    [&](const CompanyContribution& c) {
                        return c.service_id == service.id && c.level == Level::B;
                    });
    if (has_b_contributions && service.building_blocks.empty()) {
        throw InputError("service '" + service.id +
                         "' has B-level contributions but no building blocks");
    }
    if (!service.building_blocks.empty()) {
        const auto block_shares = b_level_slot_shares(e_star_kg, service.building_blocks);
        for (const auto& bs : block_shares) {
            std::vector<RoleClaim> b_claims;
            for (const auto& c : contributions) {
                if (c.service_id != service.id || c.level != Level::B) continue;
                if (!c.building_block_id) {
                    throw InputError("B-level contribution of '" + c.company_id +
                                     "' to '" + service.id + "' names no building block");
                }
                if (*c.building_block_id != bs.block_id) continue;
                for (Role r : c.roles) b_claims.push_back({r, c.company_id});
            }
            const auto b_resolution = resolve_roles(b_claims, service.innovator_identified);
            for (std::size_t i = 0; i < kAllRoles.size(); ++i) {
                alloc.b_slots.push_back({bs.block_id, kAllRoles[i], bs.role_shares_kg[i],
                                         b_resolution.company[i]});
            }
        }
    }

    // C-level: every registered contributor claims the full share.
    for (const auto& c : contributions) {
        if (c.service_id != service.id || c.level != Level::C) continue;
        if (std::find(alloc.c_claimants.begin(), alloc.c_claimants.end(), c.company_id) ==
            alloc.c_claimants.end()) {
            alloc.c_claimants.push_back(c.company_id);
        }
    }
    std::sort(alloc.c_claimants.begin(), alloc.c_claimants.end());

    return alloc;
}

}  // namespace enact
