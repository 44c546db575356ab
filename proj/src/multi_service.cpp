#include "enact/multi_service.hpp"

#include <algorithm>
#include <cmath>

#include "enact/errors.hpp"

namespace enact {

namespace {

void check_inputs(double footprint_kg, std::span<const double> effects_kg) {
    if (footprint_kg < 0.0) {
        throw InputError("reference-activity footprint is negative");
    }
    if (footprint_kg == 0.0) {
        for (double e : effects_kg) {
            if (e != 0.0) {
                throw InputError(
                    "zero-footprint activity cannot carry a nonzero service effect");
            }
        }
        return;
    }
    for (double e : effects_kg) {
        if (e > footprint_kg && !approx_equal(e, footprint_kg)) {
            throw ConsistencyError("service effect " + std::to_string(e) +
                                   " kg exceeds activity footprint " +
                                   std::to_string(footprint_kg) + " kg");
        }
    }
}

}  // namespace

double joint_effect(double footprint_kg, std::span<const double> effects_kg) {
    check_inputs(footprint_kg, effects_kg);
    if (footprint_kg == 0.0) return 0.0;
    // a lone service passes through exactly; FP*(1-(1-E/FP)) would round
    if (effects_kg.size() == 1) return effects_kg[0];

    double residual_fraction = 1.0;
    for (double e : effects_kg) {
        residual_fraction *= 1.0 - e / footprint_kg;
    }
    const double joint = footprint_kg * (1.0 - residual_fraction);

    // Negative effects grow the residual; beyond the footprint's magnitude
    // the composition loses meaning.
    if (std::fabs(joint) > footprint_kg && !approx_equal(std::fabs(joint), footprint_kg)) {
        throw ConsistencyError("joint effect " + std::to_string(joint) +
                               " kg leaves [-FP, FP] for footprint " +
                               std::to_string(footprint_kg) + " kg");
    }
    return joint;
}

std::vector<double> service_shares(double footprint_kg, std::span<const double> effects_kg) {
    const double joint = joint_effect(footprint_kg, effects_kg);
    if (effects_kg.size() == 1) return {joint};

    const bool all_zero = std::all_of(effects_kg.begin(), effects_kg.end(),
                                      [](double e) { return e == 0.0; });
    if (all_zero) return std::vector<double>(effects_kg.size(), 0.0);

    double sum = 0.0;
    for (double e : effects_kg) sum += e;
    if (approx_equal(sum, 0.0)) {
        throw InputError(
            "indeterminate proportional shares: mixed-sign effects sum to zero");
    }

    std::vector<double> shares;
    shares.reserve(effects_kg.size());
    for (double e : effects_kg) shares.push_back(e / sum * joint);
    return shares;
}

TotalEffectResult total_effect(std::span<const ActivityFootprint> activities,
                               std::span<const EffectCell> cells) {
    TotalEffectResult result;
    double direct_total = 0.0;  // per-activity composition path

    for (const auto& act : activities) {
        JointActivityResult jar;
        jar.activity_id = act.activity_id;
        jar.footprint_kg = act.footprint_kg;
        for (const auto& cell : cells) {
            if (cell.activity_id != act.activity_id) continue;
            jar.service_ids.push_back(cell.service_id);
            jar.effects_kg.push_back(cell.effect_kg);
            jar.naive_sum_kg += cell.effect_kg;
        }
        jar.joint_effect_kg = joint_effect(act.footprint_kg, jar.effects_kg);
        jar.shares_kg = service_shares(act.footprint_kg, jar.effects_kg);

        direct_total += jar.joint_effect_kg;
        for (double s : jar.shares_kg) result.total_kg += s;
        result.per_activity.push_back(std::move(jar));
    }

    for (const auto& cell : cells) {
        const bool known = std::any_of(activities.begin(), activities.end(),
                                       [&](const ActivityFootprint& a) {
                                           return a.activity_id == cell.activity_id;
                                       });
        if (!known) {
            throw InputError("effect references unknown activity '" + cell.activity_id + "'");
        }
    }

    if (!approx_equal(result.total_kg, direct_total)) {
        throw ConsistencyError("share-summation total disagrees with per-activity composition");
    }
    return result;
}

}  // namespace enact
