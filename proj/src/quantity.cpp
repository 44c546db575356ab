#include "enact/quantity.hpp"

#include <cstdio>

namespace enact {

std::string format_kg(double kg) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", kg);
    return buf;
}

std::optional<Unit> parse_unit(std::string_view tag) {
    if (tag == "kg_co2e") return Unit::KgCO2e;
    if (tag == "t_co2e") return Unit::TCO2e;
    if (tag == "kt_co2e") return Unit::KtCO2e;
    return std::nullopt;
}

std::string_view unit_tag(Unit u) {
    switch (u) {
        case Unit::KgCO2e: return "kg_co2e";
        case Unit::TCO2e: return "t_co2e";
        case Unit::KtCO2e: return "kt_co2e";
    }
    return "kg_co2e";
}

std::optional<Perspective> parse_perspective(std::string_view tag) {
    if (tag == "P") return Perspective::Present;
    if (tag == "PP") return Perspective::PresentPotential;
    if (tag == "F") return Perspective::Future;
    return std::nullopt;
}

std::string_view perspective_tag(Perspective p) {
    switch (p) {
        case Perspective::Present: return "P";
        case Perspective::PresentPotential: return "PP";
        case Perspective::Future: return "F";
    }
    return "P";
}

}  // namespace enact
