#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "enact/engine.hpp"
#include "enact/errors.hpp"
#include "enact/report.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;

void print_findings(const std::vector<enact::Finding>& findings) {
    for (const auto& f : findings) {
        std::cout << "[" << enact::severity_tag(f.severity) << "] " << f.code << " "
                  << f.message << " (" << f.location << ")\n";
    }
}

int write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << path.string() << "'\n";
        return kExitInput;
    }
    out << content;
    return out.good() ? kExitOk : kExitInput;
}

struct CommonArgs {
    std::string input;
    bool strict = false;
};

int run_assess(const CommonArgs& args, const std::string& out_dir, const std::string& format,
               int digits_override) {
    enact::ParsedDocument doc = enact::load_document(args.input, args.strict);
    enact::AssessmentResult result =
        enact::run_assessment(doc.portfolio, doc.options);
    result.findings.insert(result.findings.end(), doc.parse_warnings.begin(),
                           doc.parse_warnings.end());
    enact::sort_findings(result.findings);

    const int digits = digits_override >= 0 ? digits_override : doc.options.digits;
    const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    const std::string stem = fs::path(args.input).stem().string();

    if (format == "text" || format == "both") {
        const int rc = write_file(dir / (stem + ".report.txt"),
                                  enact::render_text_report(result, digits));
        if (rc != kExitOk) return rc;
    }
    if (format == "json" || format == "both") {
        const int rc = write_file(dir / (stem + ".report.json"),
                                  enact::machine_report(result).dump(2) + "\n");
        if (rc != kExitOk) return rc;
    }

    print_findings(result.findings);
    return (result.completed && !enact::has_errors(result.findings)) ? kExitOk
                                                                     : kExitValidation;
}

int run_validate(const CommonArgs& args) {
    enact::ParsedDocument doc = enact::load_document(args.input, args.strict);
    auto findings = enact::validate_portfolio(doc.portfolio, doc.options);
    findings.insert(findings.end(), doc.parse_warnings.begin(), doc.parse_warnings.end());
    enact::sort_findings(findings);
    print_findings(findings);
    return enact::has_errors(findings) ? kExitValidation : kExitOk;
}

int run_explain(const CommonArgs& args, const std::string& service,
                const std::string& activity) {
    enact::ParsedDocument doc = enact::load_document(args.input, args.strict);
    enact::AssessmentResult result = enact::run_assessment(doc.portfolio, doc.options);
    if (!result.completed) {
        print_findings(result.findings);
        return kExitValidation;
    }
    nlohmann::json out;
    out["equation_trace"] = enact::equation_trace(doc.portfolio, result, service, activity);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Induced-effect assessment of ICT service portfolios"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string out_dir;
    std::string format = "both";
    int digits = -1;
    std::string service;
    std::string activity;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", args.input, "assessment document (JSON)")->required();
        cmd->add_flag("--strict", args.strict, "reject unknown document keys");
    };

    CLI::App* assess = app.add_subcommand("assess", "run the full five-step assessment");
    add_common(assess);
    assess->add_option("--out-dir", out_dir, "directory for report files");
    assess->add_option("--format", format, "report formats: text, json or both")
        ->check(CLI::IsMember({"text", "json", "both"}));
    assess->add_option("--digits", digits, "decimal places in the text report")
        ->check(CLI::Range(0, 12));

    CLI::App* validate =
        app.add_subcommand("validate", "parse and run eligibility checks only");
    add_common(validate);

    CLI::App* explain =
        app.add_subcommand("explain", "trace the equations for one service and activity");
    add_common(explain);
    explain->add_option("--service", service, "service id")->required();
    explain->add_option("--activity", activity, "activity id")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (assess->parsed()) return run_assess(args, out_dir, format, digits);
        if (validate->parsed()) return run_validate(args);
        if (explain->parsed()) return run_explain(args, service, activity);
    } catch (const enact::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const enact::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const enact::ConsistencyError& e) {
        std::cerr << "consistency error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
