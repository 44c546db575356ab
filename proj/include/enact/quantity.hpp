#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "enact/errors.hpp"

namespace enact {

/// Relative tolerance used by every equality invariant in the engine.
inline constexpr double kRelTol = 1e-9;
/// Absolute tolerance (kg CO2e) used near zero.
inline constexpr double kAbsTolKg = 1e-6;

inline bool approx_equal(double a, double b) {
    const double diff = std::fabs(a - b);
    if (diff <= kAbsTolKg) return true;
    return diff <= kRelTol * std::max(std::fabs(a), std::fabs(b));
}

/// Mass-of-CO2e units accepted on input. Internal canonical unit is kg CO2e;
/// conversions are exact decimal scalings.
enum class Unit { KgCO2e, TCO2e, KtCO2e };

constexpr double unit_scale_kg(Unit u) {
    switch (u) {
        case Unit::KgCO2e: return 1.0;
        case Unit::TCO2e: return 1e3;
        case Unit::KtCO2e: return 1e6;
    }
    return 1.0;
}

std::optional<Unit> parse_unit(std::string_view tag);
std::string_view unit_tag(Unit u);

/// Compact decimal rendering for messages and the text report.
std::string format_kg(double kg);

/// A mass of CO2-equivalent emissions per assessment period.
struct FootprintQuantity {
    double value = 0.0;
    Unit unit = Unit::KgCO2e;

    /// Value expressed in kg CO2e.
    double kg() const { return value * unit_scale_kg(unit); }

    FootprintQuantity to_canonical() const { return {kg(), Unit::KgCO2e}; }
};

/// Whether an assessment addresses the present situation (P), the
/// circumstantial potential of the present (PP), or a future potential (F).
enum class Perspective { Present, PresentPotential, Future };

std::optional<Perspective> parse_perspective(std::string_view tag);
std::string_view perspective_tag(Perspective p);

/// A signed induced-effect value stamped with its time perspective.
/// Arithmetic across different perspectives is rejected.
struct Effect {
    double kg = 0.0;
    Perspective perspective = Perspective::Present;

    Effect& operator+=(const Effect& other) {
        if (other.perspective != perspective) {
            throw InputError("cannot combine effects with different time perspectives ('" +
                             std::string(perspective_tag(perspective)) + "' vs '" +
                             std::string(perspective_tag(other.perspective)) + "')");
        }
        kg += other.kg;
        return *this;
    }

    friend Effect operator+(Effect lhs, const Effect& rhs) {
        lhs += rhs;
        return lhs;
    }
};

}  // namespace enact
