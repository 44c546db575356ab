#include "enact/single_service.hpp"

#include <cmath>

#include "enact/errors.hpp"

namespace enact {

double per_usage_effect(const UsageRecord& u) {
    return u.fp_activity.kg() - (u.fp_residual_activity.kg() + u.fp_service.kg());
}

namespace {

void require_nonempty(const CaseStudy& cs) {
    if (cs.modified_usages.empty()) {
        throw InputError("case study '" + cs.id + "' has no modified usages");
    }
}

double rebound_cost(const CaseStudy& cs) {
    double cost = 0.0;
    for (const auto& r : cs.rebound_usages) {
        cost += r.fp_service.kg() + r.fp_residual_activity.kg();
    }
    return cost;
}

}  // namespace

double case_study_effect(const CaseStudy& cs) {
    require_nonempty(cs);
    double total = 0.0;
    for (const auto& u : cs.modified_usages) total += per_usage_effect(u);
    return total - rebound_cost(cs);
}

double avg_per_usage_effect(const CaseStudy& cs) {
    require_nonempty(cs);
    double total = 0.0;
    for (const auto& u : cs.modified_usages) total += per_usage_effect(u);
    return total / static_cast<double>(cs.modified_usages.size());
}

SingleServiceResult extrapolate_effect(const CaseStudy& cs, const FootprintQuantity& fp_activity,
                                       Perspective perspective) {
    require_nonempty(cs);
    const double k = cs.quality_coefficient;
    if (!(k > 0.0) || k > 1.0) {
        throw InputError("case study '" + cs.id + "': quality coefficient " +
                         std::to_string(k) + " outside (0, 1]");
    }
    if (cs.extrapolation_scale < 0) {
        throw InputError("case study '" + cs.id + "': negative extrapolation scale");
    }

    const double total = case_study_effect(cs);
    const double m_cs = static_cast<double>(cs.modified_usages.size());
    const double effect = k * total * static_cast<double>(cs.extrapolation_scale) / m_cs;

    const double fp = fp_activity.kg();
    if (effect > fp && !approx_equal(effect, fp)) {
        throw ConsistencyError("case study '" + cs.id + "': extrapolated effect " +
                               std::to_string(effect) +
                               " kg exceeds reference-activity footprint " +
                               std::to_string(fp) + " kg");
    }

    SingleServiceResult result;
    result.effect = {effect, perspective};
    result.provenance = SingleServiceResult::Provenance::CaseStudy;
    result.case_study = CaseStudyProvenance{
        total,
        avg_per_usage_effect(cs),
        k,
        cs.extrapolation_scale,
        static_cast<long long>(cs.modified_usages.size()),
        !cs.rebound_usages.empty(),
    };
    if (!cs.rebound_usages.empty()) {
        result.overstated_effect_kg = overstated_effect_diagnostic(cs).overstated_kg;
    }
    return result;
}

SingleServiceResult model_based_effect(const FootprintQuantity& avg_per_usage, long long scale,
                                       Perspective perspective) {
    if (scale < 0) throw InputError("model effect: negative usage scale");
    SingleServiceResult result;
    result.effect = {avg_per_usage.kg() * static_cast<double>(scale), perspective};
    result.provenance = SingleServiceResult::Provenance::Model;
    return result;
}

double aggregate_substitution_effect(double fp_activity_kg, double fp_service_kg) {
    return fp_activity_kg - fp_service_kg;
}

double aggregate_optimization_effect(double fp_activity_kg, double fp_residual_kg,
                                     double fp_service_kg) {
    return fp_activity_kg - (fp_residual_kg + fp_service_kg);
}

OverstatementDiagnostic overstated_effect_diagnostic(const CaseStudy& cs) {
    require_nonempty(cs);
    OverstatementDiagnostic d;
    d.correct_kg = case_study_effect(cs);
    double mean_baseline = 0.0;
    for (const auto& u : cs.modified_usages) mean_baseline += u.fp_activity.kg();
    mean_baseline /= static_cast<double>(cs.modified_usages.size());
    // The overstated variant credits the (imputed) baseline to rebound
    // usages as well.
    d.overstated_kg =
        d.correct_kg + mean_baseline * static_cast<double>(cs.rebound_usages.size());
    d.delta_kg = d.overstated_kg - d.correct_kg;
    return d;
}

}  // namespace enact
