#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "enact/model.hpp"

namespace enact {

/// Equal quarter split of a service share across the four roles.
std::array<double, 4> a_level_role_shares(double e_star_kg);

struct BlockRoleShare {
    std::string block_id;
    std::array<double, 4> role_shares_kg{};  // indexed like kAllRoles
};

/// Per-building-block, per-role split of a service share. Blocks split
/// equally unless explicit weights are given.
std::vector<BlockRoleShare> b_level_slot_shares(double e_star_kg,
                                                const std::vector<BuildingBlock>& blocks);

/// Which company, if any, holds each role of one slot after applying the
/// innovator-fallback rule.
struct RoleResolution {
    std::array<std::optional<std::string>, 4> company;  // indexed like kAllRoles
};

struct RoleClaim {
    Role role;
    std::string company_id;
};

/// Resolves role claims for one slot. Each role may be claimed by at most
/// one company. When no distinct innovator exists and nobody claims the
/// innovator role, it falls to the developer's company; with the innovator
/// marked identifiable, an unclaimed innovator slot stays unclaimed.
RoleResolution resolve_roles(const std::vector<RoleClaim>& claims, bool innovator_identified);

/// Complete allocation of one service share on one activity.
struct ServiceActivityAllocation {
    std::string service_id;
    std::string activity_id;
    double e_star_kg = 0.0;

    struct ASlot {
        Role role;
        double amount_kg = 0.0;
        std::optional<std::string> company_id;
    };
    std::vector<ASlot> a_slots;  // always the four roles

    struct BSlot {
        std::string block_id;
        Role role;
        double amount_kg = 0.0;
        std::optional<std::string> company_id;
    };
    std::vector<BSlot> b_slots;  // empty when the service has no blocks

    // C-level claimants; each may state the full share, never summed.
    std::vector<std::string> c_claimants;

    double a_claimed_kg() const;
    double a_unclaimed_kg() const;
    double b_claimed_kg() const;
    double b_unclaimed_kg() const;
    bool has_b_level() const { return !b_slots.empty(); }

    /// The company's conserved claim at one level on this cell.
    double company_claim_kg(const std::string& company_id, Level level) const;
};

/// Allocates one (service, activity) share across levels, blocks and roles.
/// `contributions` are the portfolio contributions for this service.
ServiceActivityAllocation allocate_service_activity(
    const ICTService& service, const std::string& activity_id, double e_star_kg,
    const std::vector<CompanyContribution>& contributions);

}  // namespace enact
