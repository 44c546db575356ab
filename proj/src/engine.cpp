#include "enact/engine.hpp"

#include <algorithm>

#include "enact/errors.hpp"
#include "enact/multi_service.hpp"

namespace enact {

SingleServiceResult resolve_effect(const Portfolio& portfolio, const ICTService& service,
                                   const ServiceActivityEffect& effect) {
    const ReferenceActivity* activity = portfolio.find_activity(effect.activity_id);
    if (!activity) {
        throw InputError("service '" + service.id + "' references unknown activity '" +
                         effect.activity_id + "'");
    }

    SingleServiceResult result;
    switch (effect.source.kind) {
        case EffectSource::Kind::Direct:
            result.effect = {effect.source.direct_value.kg(), portfolio.perspective};
            result.provenance = SingleServiceResult::Provenance::Direct;
            break;
        case EffectSource::Kind::Model:
            result = model_based_effect(effect.source.avg_per_usage, effect.source.model_scale,
                                        portfolio.perspective);
            break;
        case EffectSource::Kind::CaseStudyRef: {
            const CaseStudy* cs = portfolio.find_case_study(effect.source.case_study_id);
            if (!cs) {
                throw InputError("service '" + service.id +
                                 "' references unknown case study '" +
                                 effect.source.case_study_id + "'");
            }
            result = extrapolate_effect(*cs, activity->footprint, portfolio.perspective);
            break;
        }
    }
    result.service_id = service.id;
    result.activity_id = effect.activity_id;

    const double fp = activity->footprint.kg();
    if (result.effect.kg > fp && !approx_equal(result.effect.kg, fp)) {
        throw ConsistencyError("effect of service '" + service.id + "' on activity '" +
                               effect.activity_id + "' (" + format_kg(result.effect.kg) +
                               " kg) exceeds the reference-activity footprint (" +
                               format_kg(fp) + " kg)");
    }
    return result;
}

std::vector<Finding> validate_portfolio(const Portfolio& portfolio,
                                        const OutputOptions& options) {
    std::vector<Finding> findings;
    for (const auto& service : portfolio.services) {
        auto f = check_service_eligibility(service);
        findings.insert(findings.end(), f.begin(), f.end());
    }
    auto roles = check_role_claims(portfolio);
    findings.insert(findings.end(), roles.begin(), roles.end());
    auto mixing = check_level_mixing(options.sections);
    findings.insert(findings.end(), mixing.begin(), mixing.end());
    sort_findings(findings);
    return findings;
}

AssessmentResult run_assessment(const Portfolio& portfolio, const OutputOptions& options) {
    AssessmentResult result;

    // Stages 1-2: the perspective is fixed by the document; eligibility and
    // structural rules gate everything downstream.
    result.findings = validate_portfolio(portfolio, options);
    if (has_errors(result.findings)) {
        sort_findings(result.findings);
        return result;
    }

    // Stage 3: per-service effects, then joint effects and shares.
    std::vector<SingleServiceResult> singles;
    std::vector<EffectCell> cells;
    for (const auto& service : portfolio.services) {
        for (const auto& effect : service.effects) {
            SingleServiceResult r = resolve_effect(portfolio, service, effect);
            cells.push_back({r.service_id, r.activity_id, r.effect.kg});
            singles.push_back(std::move(r));
        }
    }

    std::vector<ActivityFootprint> footprints;
    footprints.reserve(portfolio.activities.size());
    for (const auto& a : portfolio.activities) {
        footprints.push_back({a.id, a.footprint.kg()});
    }
    TotalEffectResult totals = total_effect(footprints, cells);

    auto append = [&](std::vector<Finding> f) {
        result.findings.insert(result.findings.end(), std::make_move_iterator(f.begin()),
                               std::make_move_iterator(f.end()));
    };
    append(lint_negative_effects(singles));
    append(lint_rebound_overstatement(singles));
    append(check_shared_activity_composition(portfolio, totals.per_activity));
    if (has_errors(result.findings)) {
        sort_findings(result.findings);
        return result;
    }

    // Stage 4: allocation of each service share.
    std::vector<CompanyContribution> contributions;
    for (const auto& company : portfolio.companies) {
        contributions.insert(contributions.end(), company.contributions.begin(),
                             company.contributions.end());
    }
    std::vector<ServiceActivityAllocation> allocations;
    for (const auto& joint : totals.per_activity) {
        for (std::size_t i = 0; i < joint.service_ids.size(); ++i) {
            const ICTService* service = portfolio.find_service(joint.service_ids[i]);
            allocations.push_back(allocate_service_activity(*service, joint.activity_id,
                                                            joint.shares_kg[i], contributions));
        }
    }
    append(check_hundred_percent_rule(allocations));
    if (has_errors(result.findings)) {
        sort_findings(result.findings);
        return result;
    }

    // Stage 5: company aggregation and summary assembly.
    result.summary =
        portfolio_summary(portfolio, totals, std::move(singles), std::move(allocations));
    result.completed = true;
    sort_findings(result.findings);
    return result;
}

}  // namespace enact
