#pragma once

#include <optional>
#include <string>

#include "enact/model.hpp"

namespace enact {

/// Case-study provenance of a resolved effect, kept for reporting.
struct CaseStudyProvenance {
    double total_effect_kg = 0.0;     // case-study effect, rebound included
    double avg_per_usage_kg = 0.0;    // rebound-free mean over the studied usages
    double quality_coefficient = 1.0;
    long long extrapolation_scale = 0;
    long long studied_usages = 0;
    bool rebound_included = false;
};

struct SingleServiceResult {
    std::string service_id;
    std::string activity_id;
    Effect effect;
    enum class Provenance { Direct, Model, CaseStudy } provenance = Provenance::Direct;
    std::optional<CaseStudyProvenance> case_study;
    std::optional<double> overstated_effect_kg;  // diagnostic, rebound studies only
};

/// Per-usage induced effect: baseline minus residual and service costs.
/// May be negative.
double per_usage_effect(const UsageRecord& u);

/// Total effect over the study: sum of per-usage effects over the modified
/// usages minus the costs of the rebound usages.
double case_study_effect(const CaseStudy& cs);

/// Mean effect per studied usage, rebound-free by definition; the
/// rebound-inclusive path goes through extrapolation directly.
double avg_per_usage_effect(const CaseStudy& cs);

/// Extrapolates a case study to the service level: quality coefficient times
/// the study total scaled from the studied usage count to the target count.
/// Fails if the result exceeds the reference activity's footprint.
SingleServiceResult extrapolate_effect(const CaseStudy& cs, const FootprintQuantity& fp_activity,
                                       Perspective perspective);

/// Effect from a modelled average per-usage value at a target scale.
SingleServiceResult model_based_effect(const FootprintQuantity& avg_per_usage, long long scale,
                                       Perspective perspective);

/// Substitution at aggregate level: baseline footprint at the target scale
/// minus the service footprint including rebound usages.
double aggregate_substitution_effect(double fp_activity_kg, double fp_service_kg);

/// Optimization at aggregate level: baseline minus residual-activity and
/// service footprints, both including rebound usages.
double aggregate_optimization_effect(double fp_activity_kg, double fp_residual_kg,
                                     double fp_service_kg);

/// Contrasts the correct rebound handling with the overstated variant that
/// credits a baseline to rebound usages too. Rebound usages carry no recorded
/// baseline, so the overstated branch imputes the mean baseline of the
/// studied usages.
struct OverstatementDiagnostic {
    double correct_kg = 0.0;
    double overstated_kg = 0.0;
    double delta_kg = 0.0;
};

OverstatementDiagnostic overstated_effect_diagnostic(const CaseStudy& cs);

}  // namespace enact
