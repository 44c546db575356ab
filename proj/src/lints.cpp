#include "enact/lints.hpp"

#include <map>
#include <set>

namespace enact {

namespace {

Finding make(Severity sev, std::string_view code, std::string message, std::string location) {
    return Finding{sev, std::string(code), std::move(message), std::move(location)};
}

}  // namespace

std::vector<Finding> check_service_eligibility(const ICTService& service) {
    std::vector<Finding> findings;
    const std::string loc = "services/" + service.id;
    if (service.embedded_only) {
        findings.push_back(make(Severity::Error, codes::kEligEmbedded,
                                "service '" + service.id +
                                    "' is an embedded/admin-design-control system and is "
                                    "not an ICT service",
                                loc));
    }
    if (!service.ict_is_key_enabler) {
        findings.push_back(make(Severity::Error, codes::kEligKeyEnabler,
                                "service '" + service.id +
                                    "' does not declare ICT as its key enabler",
                                loc));
    }
    return findings;
}

std::vector<Finding> check_role_claims(const Portfolio& portfolio) {
    std::vector<Finding> findings;
    // slot key: (service, level tag, block-or-empty, role)
    std::map<std::tuple<std::string, char, std::string, Role>, std::set<std::string>> slots;
    for (const auto& company : portfolio.companies) {
        for (const auto& c : company.contributions) {
            if (c.level == Level::C) continue;
            const char level = c.level == Level::A ? 'A' : 'B';
            const std::string block = c.building_block_id.value_or("");
            for (Role r : c.roles) {
                slots[{c.service_id, level, block, r}].insert(c.company_id);
            }
        }
    }
    for (const auto& [key, companies] : slots) {
        if (companies.size() < 2) continue;
        const auto& [service, level, block, role] = key;
        std::string claimants;
        for (const auto& co : companies) {
            if (!claimants.empty()) claimants += ", ";
            claimants += "'" + co + "'";
        }
        std::string slot_desc = std::string(1, level) + "-level role " +
                                std::string(role_tag(role));
        if (!block.empty()) slot_desc += " of block '" + block + "'";
        findings.push_back(make(Severity::Error, codes::kHundredRule,
                                slot_desc + " on service '" + service +
                                    "' is claimed by several companies: " + claimants,
                                "services/" + service));
    }
    return findings;
}

std::vector<Finding> check_shared_activity_composition(
    const Portfolio& portfolio, const std::vector<JointActivityResult>& joints) {
    std::vector<Finding> findings;
    for (const auto& joint : joints) {
        const std::string loc = "activities/" + joint.activity_id;
        if (joint.service_ids.size() >= 2) {
            std::string services;
            for (const auto& s : joint.service_ids) {
                if (!services.empty()) services += ", ";
                services += "'" + s + "'";
            }
            findings.push_back(make(
                Severity::Note, codes::kSharedActivity,
                "activity '" + joint.activity_id + "' is modified by " +
                    std::to_string(joint.service_ids.size()) + " services (" + services +
                    "); joint effect composed via the residual footprint",
                loc));
        }
        const ReferenceActivity* act = portfolio.find_activity(joint.activity_id);
        if (act && act->declared_joint_effect) {
            const double declared = act->declared_joint_effect->kg();
            if (declared > joint.joint_effect_kg &&
                !approx_equal(declared, joint.joint_effect_kg)) {
                findings.push_back(make(
                    Severity::Error, codes::kNaiveSum,
                    "declared joint effect " + format_kg(declared) + " kg on activity '" +
                        joint.activity_id + "' exceeds the composed joint effect " +
                        format_kg(joint.joint_effect_kg) + " kg; looks like a naive sum",
                    loc));
            }
        }
    }
    return findings;
}

std::vector<Finding> check_level_mixing(const std::vector<std::string>& requested_sections) {
    static const std::set<std::string> forbidden = {
        "company_total_all_levels", "company_total_ab", "company_total_ac",
        "company_total_bc"};
    std::vector<Finding> findings;
    for (const auto& section : requested_sections) {
        if (forbidden.count(section)) {
            findings.push_back(make(
                Severity::Error, codes::kLevelMix,
                "requested output '" + section +
                    "' would add contribution levels together and double count",
                "output_options/sections"));
        }
    }
    return findings;
}

std::vector<Finding> check_hundred_percent_rule(
    const std::vector<ServiceActivityAllocation>& allocations) {
    std::vector<Finding> findings;
    for (const auto& alloc : allocations) {
        const std::string loc =
            "services/" + alloc.service_id + "/effects/" + alloc.activity_id;
        const double a_sum = alloc.a_claimed_kg() + alloc.a_unclaimed_kg();
        if (!approx_equal(a_sum, alloc.e_star_kg)) {
            findings.push_back(make(Severity::Error, codes::kHundredRule,
                                    "A-level claims on service '" + alloc.service_id +
                                        "' sum to " + format_kg(a_sum) +
                                        " kg instead of the service share " +
                                        format_kg(alloc.e_star_kg) + " kg",
                                    loc));
        }
        if (alloc.has_b_level()) {
            const double b_sum = alloc.b_claimed_kg() + alloc.b_unclaimed_kg();
            if (!approx_equal(b_sum, alloc.e_star_kg)) {
                findings.push_back(make(Severity::Error, codes::kHundredRule,
                                        "B-level claims on service '" + alloc.service_id +
                                            "' sum to " + format_kg(b_sum) +
                                            " kg instead of the service share " +
                                            format_kg(alloc.e_star_kg) + " kg",
                                        loc));
            }
        }
        const double unclaimed = alloc.a_unclaimed_kg() +
                                 (alloc.has_b_level() ? alloc.b_unclaimed_kg() : 0.0);
        if (unclaimed > kAbsTolKg) {
            findings.push_back(make(Severity::Note, codes::kUnclaimed,
                                    format_kg(unclaimed) + " kg of service '" +
                                        alloc.service_id + "' on activity '" +
                                        alloc.activity_id +
                                        "' is allocated to slots with no claimant",
                                    loc));
        }
    }
    return findings;
}

std::vector<Finding> lint_rebound_overstatement(
    const std::vector<SingleServiceResult>& results) {
    std::vector<Finding> findings;
    for (const auto& r : results) {
        if (!r.case_study || !r.case_study->rebound_included || !r.overstated_effect_kg) {
            continue;
        }
        const double delta = *r.overstated_effect_kg - r.case_study->total_effect_kg;
        if (delta <= kAbsTolKg) continue;
        findings.push_back(make(Severity::Note, codes::kReboundDelta,
                                "overstatement avoided: " + format_kg(delta) +
                                    " kg CO2e (service '" + r.service_id +
                                    "', activity '" + r.activity_id + "')",
                                "services/" + r.service_id + "/effects/" + r.activity_id));
    }
    return findings;
}

std::vector<Finding> lint_negative_effects(const std::vector<SingleServiceResult>& results) {
    std::vector<Finding> findings;
    for (const auto& r : results) {
        if (r.effect.kg >= 0.0) continue;
        findings.push_back(make(Severity::Warning, codes::kNegativeEffect,
                                "service '" + r.service_id + "' has a net-harmful effect of " +
                                    format_kg(r.effect.kg) + " kg on activity '" +
                                    r.activity_id + "'",
                                "services/" + r.service_id + "/effects/" + r.activity_id));
    }
    return findings;
}

}  // namespace enact
