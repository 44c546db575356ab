#include "enact/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "enact/errors.hpp"
#include "enact/single_service.hpp"

namespace enact {

namespace {

using nlohmann::json;

json findings_json(const std::vector<Finding>& findings) {
    json out = json::array();
    for (const auto& f : findings) {
        out.push_back({{"severity", std::string(severity_tag(f.severity))},
                       {"code", f.code},
                       {"message", f.message},
                       {"location", f.location}});
    }
    return out;
}

json allocation_json(const ServiceActivityAllocation& alloc) {
    json a_slots = json::array();
    for (const auto& s : alloc.a_slots) {
        json slot = {{"role", std::string(role_tag(s.role))}, {"amount_kg", s.amount_kg}};
        if (s.company_id) slot["company_id"] = *s.company_id;
        a_slots.push_back(std::move(slot));
    }
    json b_slots = json::array();
    for (const auto& s : alloc.b_slots) {
        json slot = {{"block_id", s.block_id},
                     {"role", std::string(role_tag(s.role))},
                     {"amount_kg", s.amount_kg}};
        if (s.company_id) slot["company_id"] = *s.company_id;
        b_slots.push_back(std::move(slot));
    }
    json out = {{"a_slots", std::move(a_slots)},
                {"a_unclaimed_kg", alloc.a_unclaimed_kg()},
                {"c_claimants", alloc.c_claimants}};
    if (alloc.has_b_level()) {
        out["b_slots"] = std::move(b_slots);
        out["b_unclaimed_kg"] = alloc.b_unclaimed_kg();
    }
    return out;
}

const ServiceActivityAllocation* find_allocation(const PortfolioSummary& summary,
                                                 const std::string& service_id,
                                                 const std::string& activity_id) {
    for (const auto& a : summary.allocations) {
        if (a.service_id == service_id && a.activity_id == activity_id) return &a;
    }
    return nullptr;
}

}  // namespace

json machine_report(const AssessmentResult& result) {
    const PortfolioSummary& s = result.summary;
    json report;

    report["summary"] = {{"schema_version", "1"},
                         {"completed", result.completed},
                         {"perspective", std::string(perspective_tag(s.perspective))},
                         {"total_effect_kg", s.total_effect_kg},
                         {"activity_count", s.per_activity.size()},
                         {"company_count", s.companies.size()}};

    json per_activity = json::array();
    {
        auto activities = s.per_activity;
        std::sort(activities.begin(), activities.end(),
                  [](const auto& a, const auto& b) { return a.activity_id < b.activity_id; });
        for (const auto& joint : activities) {
            json services = json::array();
            std::vector<std::size_t> order(joint.service_ids.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return joint.service_ids[a] < joint.service_ids[b];
            });
            for (std::size_t i : order) {
                services.push_back({{"service_id", joint.service_ids[i]},
                                    {"effect_kg", joint.effects_kg[i]},
                                    {"share_kg", joint.shares_kg[i]}});
            }
            per_activity.push_back({{"activity_id", joint.activity_id},
                                    {"footprint_kg", joint.footprint_kg},
                                    {"joint_effect_kg", joint.joint_effect_kg},
                                    {"naive_sum_kg", joint.naive_sum_kg},
                                    {"services", std::move(services)}});
        }
    }
    report["per_activity"] = std::move(per_activity);

    json per_share = json::array();
    {
        auto allocations = s.allocations;
        std::sort(allocations.begin(), allocations.end(), [](const auto& a, const auto& b) {
            return std::tie(a.service_id, a.activity_id) < std::tie(b.service_id, b.activity_id);
        });
        for (const auto& alloc : allocations) {
            double effect_kg = 0.0;
            for (const auto& single : s.single_service_results) {
                if (single.service_id == alloc.service_id &&
                    single.activity_id == alloc.activity_id) {
                    effect_kg = single.effect.kg;
                }
            }
            per_share.push_back({{"service_id", alloc.service_id},
                                 {"activity_id", alloc.activity_id},
                                 {"effect_kg", effect_kg},
                                 {"share_kg", alloc.e_star_kg},
                                 {"allocation", allocation_json(alloc)}});
        }
    }
    report["per_service_shares"] = std::move(per_share);

    json per_company = json::array();
    for (const auto& company : s.companies) {
        json cells = json::array();
        for (const auto& c : company.per_cell) {
            cells.push_back({{"service_id", c.service_id},
                            {"activity_id", c.activity_id},
                            {"a_kg", c.a_kg},
                            {"b_kg", c.b_kg}});
        }
        json claims = json::array();
        for (const auto& c : company.c_claims) {
            claims.push_back({{"service_id", c.service_id},
                             {"activity_id", c.activity_id},
                             {"effect_kg", c.effect_kg}});
        }
        per_company.push_back({{"company_id", company.company_id},
                               {"a_total_kg", company.a_total_kg},
                               {"b_total_kg", company.b_total_kg},
                               {"per_cell", std::move(cells)},
                               {"c_claims_non_additive", std::move(claims)}});
    }
    report["per_company"] = std::move(per_company);

    report["findings"] = findings_json(result.findings);
    return report;
}

namespace {

std::string fixed(double kg, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, kg);
    return buf;
}

}  // namespace

std::string render_text_report(const AssessmentResult& result, int digits) {
    const PortfolioSummary& s = result.summary;
    std::ostringstream out;
    auto kg = [&](double v) { return fixed(v, digits) + " kg CO2e"; };

    out << "Induced-effect assessment report\n"
        << "================================\n\n";
    out << "Time perspective: " << perspective_tag(s.perspective) << "\n";
    if (!result.completed) {
        out << "\nAssessment stopped on validation errors; see findings below.\n";
    } else {
        out << "Total induced effect: " << kg(s.total_effect_kg) << "\n";

        out << "\nJoint effects per reference activity\n"
            << "------------------------------------\n";
        for (const auto& joint : s.per_activity) {
            out << "  " << joint.activity_id << " (footprint " << kg(joint.footprint_kg)
                << ")\n"
                << "    joint effect: " << kg(joint.joint_effect_kg)
                << "  (naive sum would be " << kg(joint.naive_sum_kg) << ")\n";
            for (std::size_t i = 0; i < joint.service_ids.size(); ++i) {
                out << "    " << joint.service_ids[i] << ": effect "
                    << kg(joint.effects_kg[i]) << ", share " << kg(joint.shares_kg[i]) << "\n";
            }
        }

        out << "\nAllocation per service share\n"
            << "----------------------------\n";
        for (const auto& alloc : s.allocations) {
            out << "  " << alloc.service_id << " on " << alloc.activity_id << " (share "
                << kg(alloc.e_star_kg) << ")\n";
            out << "    A-level roles:\n";
            for (const auto& slot : alloc.a_slots) {
                out << "      " << role_tag(slot.role) << ": " << kg(slot.amount_kg) << "  "
                    << (slot.company_id ? *slot.company_id : "(unclaimed)") << "\n";
            }
            if (alloc.has_b_level()) {
                out << "    B-level blocks:\n";
                for (const auto& slot : alloc.b_slots) {
                    out << "      " << slot.block_id << " / " << role_tag(slot.role) << ": "
                        << kg(slot.amount_kg) << "  "
                        << (slot.company_id ? *slot.company_id : "(unclaimed)") << "\n";
                }
            }
            if (!alloc.c_claimants.empty()) {
                out << "    C-level claimants (each may state the full share, non-additive):\n";
                for (const auto& c : alloc.c_claimants) {
                    out << "      " << c << "\n";
                }
            }
        }

        out << "\nCompany reports (A- and B-level ledgers are separate; never add them)\n"
            << "---------------------------------------------------------------------\n";
        for (const auto& company : s.companies) {
            out << "  " << company.company_id << "\n"
                << "    A-level total: " << kg(company.a_total_kg) << "\n"
                << "    B-level total: " << kg(company.b_total_kg) << "\n";
            if (!company.c_claims.empty()) {
                out << "    C-level claims (non-additive, listed per service only):\n";
                for (const auto& c : company.c_claims) {
                    out << "      " << c.service_id << " on " << c.activity_id << ": "
                        << kg(c.effect_kg) << "\n";
                }
            }
        }
    }

    out << "\nFindings\n"
        << "--------\n";
    if (result.findings.empty()) {
        out << "  none\n";
    } else {
        for (const auto& f : result.findings) {
            out << "  [" << severity_tag(f.severity) << "] " << f.code << " " << f.message
                << " (" << f.location << ")\n";
        }
    }
    return out.str();
}

json equation_trace(const Portfolio& portfolio, const AssessmentResult& result,
                    const std::string& service_id, const std::string& activity_id) {
    if (!result.completed) {
        throw InputError("cannot trace an assessment that stopped on validation errors");
    }
    const PortfolioSummary& s = result.summary;

    const SingleServiceResult* single = nullptr;
    for (const auto& r : s.single_service_results) {
        if (r.service_id == service_id && r.activity_id == activity_id) single = &r;
    }
    if (!single) {
        throw InputError("no effect of service '" + service_id + "' on activity '" +
                         activity_id + "'");
    }

    json trace;
    trace["service_id"] = service_id;
    trace["activity_id"] = activity_id;
    if (const ReferenceActivity* activity = portfolio.find_activity(activity_id)) {
        trace["activity_footprint_kg"] = activity->footprint.kg();
    }

    json resolved;
    switch (single->provenance) {
        case SingleServiceResult::Provenance::Direct: resolved["source"] = "direct"; break;
        case SingleServiceResult::Provenance::Model: resolved["source"] = "model"; break;
        case SingleServiceResult::Provenance::CaseStudy: {
            resolved["source"] = "case_study";
            const auto& cs = *single->case_study;
            resolved["case_study"] = {{"total_effect_kg", cs.total_effect_kg},
                                      {"avg_per_usage_kg", cs.avg_per_usage_kg},
                                      {"quality_coefficient", cs.quality_coefficient},
                                      {"extrapolation_scale", cs.extrapolation_scale},
                                      {"studied_usages", cs.studied_usages},
                                      {"rebound_included", cs.rebound_included}};
            if (single->overstated_effect_kg) {
                resolved["case_study"]["overstated_effect_kg"] = *single->overstated_effect_kg;
                resolved["case_study"]["overstatement_delta_kg"] =
                    *single->overstated_effect_kg - cs.total_effect_kg;
            }
            break;
        }
    }
    resolved["effect_kg"] = single->effect.kg;
    trace["resolved_effect"] = std::move(resolved);

    for (const auto& joint : s.per_activity) {
        if (joint.activity_id != activity_id) continue;
        json competitors = json::array();
        for (std::size_t i = 0; i < joint.service_ids.size(); ++i) {
            competitors.push_back(
                {{"service_id", joint.service_ids[i]}, {"effect_kg", joint.effects_kg[i]}});
        }
        trace["joint_composition"] = {{"footprint_kg", joint.footprint_kg},
                                      {"effects", std::move(competitors)},
                                      {"joint_effect_kg", joint.joint_effect_kg},
                                      {"naive_sum_kg", joint.naive_sum_kg}};
    }

    const ServiceActivityAllocation* alloc = find_allocation(s, service_id, activity_id);
    if (alloc) {
        trace["share_kg"] = alloc->e_star_kg;
        trace["allocation"] = allocation_json(*alloc);
    }
    return trace;
}

}  // namespace enact
