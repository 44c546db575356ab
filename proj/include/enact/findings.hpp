#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace enact {

enum class Severity { Error, Warning, Note };

std::string_view severity_tag(Severity s);

/// Stable finding codes; a public contract for downstream filtering.
namespace codes {
inline constexpr std::string_view kEligEmbedded = "E-ELIG-EMBEDDED";
inline constexpr std::string_view kEligKeyEnabler = "E-ELIG-KEYENABLER";
inline constexpr std::string_view kNaiveSum = "E-NAIVE-SUM";
inline constexpr std::string_view kLevelMix = "E-LEVEL-MIX";
inline constexpr std::string_view kHundredRule = "E-100-RULE";
inline constexpr std::string_view kSharedActivity = "N-SHARED-ACTIVITY";
inline constexpr std::string_view kUnclaimed = "N-UNCLAIMED";
inline constexpr std::string_view kReboundDelta = "N-REBOUND-DELTA";
inline constexpr std::string_view kNegativeEffect = "W-NEGATIVE-EFFECT";
}  // namespace codes

struct Finding {
    Severity severity = Severity::Note;
    std::string code;
    std::string message;
    std::string location;  // path into the portfolio document

    bool is_error() const { return severity == Severity::Error; }
};

/// Deterministic ordering: errors first, then by code and location.
void sort_findings(std::vector<Finding>& findings);

bool has_errors(const std::vector<Finding>& findings);

}  // namespace enact
