#include "enact/findings.hpp"

#include <algorithm>
#include <tuple>

namespace enact {

std::string_view severity_tag(Severity s) {
    switch (s) {
        case Severity::Error: return "error";
        case Severity::Warning: return "warning";
        case Severity::Note: return "note";
    }
    return "note";
}

void sort_findings(std::vector<Finding>& findings) {
    std::stable_sort(findings.begin(), findings.end(),
                     [](const Finding& a, const Finding& b) {
                         return std::tie(a.severity, a.code, a.location) <
                                std::tie(b.severity, b.code, b.location);
                     });
}

bool has_errors(const std::vector<Finding>& findings) {
    return std::any_of(findings.begin(), findings.end(),
                       [](const Finding& f) { return f.is_error(); });
}

}  // namespace enact
