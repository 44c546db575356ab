#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "enact/findings.hpp"
#include "enact/model.hpp"

namespace enact {

struct OutputOptions {
    int digits = 3;  // decimal places in the text report
    std::vector<std::string> sections;  // empty = all standard sections
};

struct ParsedDocument {
    Portfolio portfolio;
    OutputOptions options;
    std::vector<Finding> parse_warnings;  // lenient-mode notes about unknown keys
};

/// Parses and validates an assessment document (schema_version "1").
/// Structural problems, unknown tags, failed cross-references and negative
/// footprints throw ParseError. In strict mode unknown keys are rejected;
/// otherwise they produce warnings.
ParsedDocument parse_document(const std::string& json_text, bool strict);

/// Reads and parses a document from disk. JSON syntax errors are reported
/// with line and column.
ParsedDocument load_document(const std::filesystem::path& path, bool strict);

}  // namespace enact
