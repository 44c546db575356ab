#include "enact/model.hpp"

#include <algorithm>

namespace enact {

std::optional<Role> parse_role(std::string_view tag) {
    if (tag == "IN") return Role::Innovator;
    if (tag == "DE") return Role::Developer;
    if (tag == "OW") return Role::Owner;
    if (tag == "OP") return Role::Operator;
    return std::nullopt;
}

std::string_view role_tag(Role r) {
    switch (r) {
        case Role::Innovator: return "IN";
        case Role::Developer: return "DE";
        case Role::Owner: return "OW";
        case Role::Operator: return "OP";
    }
    return "IN";
}

std::optional<Level> parse_level(std::string_view tag) {
    if (tag == "A") return Level::A;
    if (tag == "B") return Level::B;
    if (tag == "C") return Level::C;
    return std::nullopt;
}

std::string_view level_tag(Level l) {
    switch (l) {
        case Level::A: return "A";
        case Level::B: return "B";
        case Level::C: return "C";
    }
    return "A";
}

namespace {
template <typename T>
const T* find_by_id(const std::vector<T>& items, std::string_view id) {
    auto it = std::find_if(items.begin(), items.end(),
                           [&](const T& x) { return x.id == id; });
    return it == items.end() ? nullptr : &*it;
}
}  // namespace

const ReferenceActivity* Portfolio::find_activity(std::string_view id) const {
    return find_by_id(activities, id);
}

const ICTService* Portfolio::find_service(std::string_view id) const {
    return find_by_id(services, id);
}

const CaseStudy* Portfolio::find_case_study(std::string_view id) const {
    return find_by_id(case_studies, id);
}

}  // namespace enact
