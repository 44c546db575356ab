// Acceptance suite: one pass/fail line per criterion. Exits nonzero if any
// criterion fails. argv[1] must point at the CLI binary.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "enact/document.hpp"
#include "enact/engine.hpp"
#include "enact/report.hpp"

namespace fs = std::filesystem;
using namespace enact;
using nlohmann::json;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass,
            const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
    if (!pass && !detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!pass) ++g_failures;
}

std::string fixture(const std::string& name) {
    return std::string(ENACT_FIXTURE_DIR) + "/" + name;
}

std::string g_cli;

int run_cli(const std::string& args, std::string* output = nullptr) {
    const fs::path out_file = fs::temp_directory_path() / "enact_cli_output.txt";
    const std::string cmd = g_cli + " " + args + " > " + out_file.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    if (output) {
        std::ifstream in(out_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        *output = buf.str();
    }
    return WEXITSTATUS(status);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

double sequential_residual(double fp, const std::vector<double>& effects) {
    double residual = fp;
    for (double e : effects) residual -= residual * (e / fp);
    return fp - residual;
}

// 1. Closed-form composition equals sequential residual application under
//    random permutations, 10,000 instances.
void criterion_1() {
    std::mt19937_64 rng(20260823);
    std::uniform_real_distribution<double> fp_dist(1e-6, 1e6);
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    for (int iter = 0; iter < 10000 && pass; ++iter) {
        const double fp = fp_dist(rng);
        std::vector<double> effects(1 + rng() % 8);
        std::uniform_real_distribution<double> e_dist(0.0, fp);
        for (auto& e : effects) e = e_dist(rng);
        const double closed = joint_effect(fp, effects);
        for (int perm = 0; perm < 3; ++perm) {
            std::shuffle(effects.begin(), effects.end(), rng);
            const double oracle = sequential_residual(fp, effects);
            if (!approx_equal(closed, oracle)) {
                pass = false;
                detail = "closed " + format_kg(closed) + " vs oracle " + format_kg(oracle);
                break;
            }
        }
    }
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    if (elapsed.count() >= 5.0) {
        pass = false;
        detail = "runtime " + std::to_string(elapsed.count()) + " s";
    }
    report(1, "residual-composition oracle (10,000 instances, 3 permutations)", pass, detail);
}

// 2. Share conservation and the two total-effect routes agreeing.
void criterion_2() {
    std::mt19937_64 rng(20260824);
    std::uniform_real_distribution<double> fp_dist(1e-6, 1e6);
    bool pass = true;
    std::string detail;
    for (int iter = 0; iter < 10000 && pass; ++iter) {
        const double fp = fp_dist(rng);
        std::vector<double> effects(1 + rng() % 8);
        std::uniform_real_distribution<double> e_dist(0.0, fp);
        for (auto& e : effects) e = e_dist(rng);
        const double joint = joint_effect(fp, effects);
        const auto shares = service_shares(fp, effects);
        const double sum = std::accumulate(shares.begin(), shares.end(), 0.0);
        if (!approx_equal(sum, joint)) {
            pass = false;
            detail = "share sum " + format_kg(sum) + " vs joint " + format_kg(joint);
        }
    }
    for (int iter = 0; iter < 500 && pass; ++iter) {
        const std::size_t m = 1 + rng() % 6;
        const std::size_t n = 1 + rng() % 6;
        std::vector<ActivityFootprint> activities;
        for (std::size_t k = 0; k < m; ++k) {
            activities.push_back({"a" + std::to_string(k), fp_dist(rng)});
        }
        std::vector<EffectCell> cells;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < m; ++k) {
                std::uniform_real_distribution<double> e_dist(0.0, activities[k].footprint_kg);
                cells.push_back({"s" + std::to_string(i), activities[k].activity_id,
                                 e_dist(rng)});
            }
        }
        const auto totals = total_effect(activities, cells);
        double direct = 0.0;
        for (const auto& joint : totals.per_activity) direct += joint.joint_effect_kg;
        if (!approx_equal(totals.total_kg, direct)) {
            pass = false;
            detail = "matrix totals disagree";
        }
    }
    report(2, "conservation suite (share sums and matrix totals)", pass, detail);
}

// 3. Single-service reductions and bit-stability under zero-effect services.
void criterion_3() {
    bool pass = true;
    std::string detail;
    std::mt19937_64 rng(20260825);
    std::uniform_real_distribution<double> fp_dist(1e-3, 1e6);
    for (int iter = 0; iter < 1000 && pass; ++iter) {
        const double fp = fp_dist(rng);
        std::uniform_real_distribution<double> e_dist(0.0, fp);
        const double e = e_dist(rng);
        const std::vector<double> single{e};
        if (joint_effect(fp, single) != e || service_shares(fp, single)[0] != e) {
            pass = false;
            detail = "single-service reduction not exact";
        }
    }
    if (pass) {
        auto doc = load_document(fixture("smart_metering.json"), true);
        auto baseline = machine_report(run_assessment(doc.portfolio, doc.options));

        std::ifstream in(fixture("smart_metering.json"));
        json raw = json::parse(in);
        raw["services"].push_back(
            {{"id", "zz_noop"},
             {"ict_is_key_enabler", true},
             {"effects",
              json::array({{{"activity_id", "household_energy_use"},
                            {"mechanism", "optimization"},
                            {"source",
                             {{"type", "direct"},
                              {"value", {{"value", 0}, {"unit", "kg_co2e"}}}}}}})}});
        auto parsed = parse_document(raw.dump(), true);
        auto with_noop = machine_report(run_assessment(parsed.portfolio, parsed.options));

        if (with_noop["per_company"].dump() != baseline["per_company"].dump() ||
            with_noop["summary"]["total_effect_kg"].dump() !=
                baseline["summary"]["total_effect_kg"].dump()) {
            pass = false;
            detail = "zero-effect service changed reported bytes";
        }
        for (const auto& activity : baseline["per_activity"]) {
            for (const auto& got : with_noop["per_activity"]) {
                if (got["activity_id"] != activity["activity_id"]) continue;
                if (got["joint_effect_kg"].dump() != activity["joint_effect_kg"].dump()) {
                    pass = false;
                    detail = "joint effect bytes changed";
                }
                for (const auto& svc : activity["services"]) {
                    bool matched = false;
                    for (const auto& got_svc : got["services"]) {
                        if (got_svc["service_id"] == svc["service_id"] &&
                            got_svc.dump() == svc.dump()) {
                            matched = true;
                        }
                    }
                    if (!matched) {
                        pass = false;
                        detail = "share bytes changed for " +
                                 svc["service_id"].get<std::string>();
                    }
                }
            }
        }
    }
    report(3, "reduction identities and zero-effect bit-stability", pass, detail);
}

// 4. The worked example, exact to 1e-9.
void criterion_4() {
    bool pass = true;
    std::string detail;
    const std::vector<double> effects{30, 20};
    const double joint = joint_effect(100, effects);
    const auto shares = service_shares(100, effects);
    if (!approx_equal(joint, 44.0)) pass = false;
    if (!approx_equal(shares[0], 26.4) || !approx_equal(shares[1], 17.6)) pass = false;

    const auto quarters = a_level_role_shares(44.0);
    for (double q : quarters) {
        if (!approx_equal(q, 11.0)) pass = false;
    }
    const auto slots = b_level_slot_shares(44.0, {{"b1", "", {}}, {"b2", "", {}}});
    for (const auto& block : slots) {
        for (double s : block.role_shares_kg) {
            if (!approx_equal(s, 5.5)) pass = false;
        }
    }

    ICTService svc;
    svc.id = "svc";
    std::vector<CompanyContribution> contributions{
        {"x", "svc", Level::A, {Role::Developer, Role::Operator}, {}}};
    auto alloc = allocate_service_activity(svc, "act", 44.0, contributions);
    if (!approx_equal(alloc.company_claim_kg("x", Level::A), 22.0)) pass = false;

    // and the committed smart-metering ledger
    auto doc = load_document(fixture("smart_metering.json"), true);
    auto result = run_assessment(doc.portfolio, doc.options);
    std::ifstream in(fixture("smart_metering.expected.json"));
    json expected = json::parse(in);
    if (!result.completed ||
        !approx_equal(result.summary.total_effect_kg,
                      expected["total_effect_kg"].get<double>())) {
        pass = false;
        detail = "smart metering ledger total mismatch";
    }
    for (const auto& company : result.summary.companies) {
        const auto& exp = expected["companies"][company.company_id];
        if (!approx_equal(company.a_total_kg, exp["a_total_kg"].get<double>()) ||
            !approx_equal(company.b_total_kg, exp["b_total_kg"].get<double>())) {
            pass = false;
            detail = "ledger mismatch for " + company.company_id;
        }
    }
    report(4, "worked example and committed ledger", pass, detail);
}

// 5. 100%-rule enforcement through the CLI and the conserved twin fixture.
void criterion_5() {
    bool pass = true;
    std::string detail;
    const fs::path out = fs::temp_directory_path() / "enact_accept_5";
    std::string output;
    const int bad = run_cli("assess " + fixture("duplicate_role.json") + " --out-dir " +
                                out.string(),
                            &output);
    if (bad != 1 || output.find("E-100-RULE") == std::string::npos) {
        pass = false;
        detail = "duplicate-role fixture: exit " + std::to_string(bad);
    }
    const int good =
        run_cli("assess " + fixture("duplicate_role_valid.json") + " --out-dir " +
                out.string());
    if (good != 0) {
        pass = false;
        detail = "valid twin fixture: exit " + std::to_string(good);
    }
    auto doc = load_document(fixture("duplicate_role_valid.json"), true);
    auto result = run_assessment(doc.portfolio, doc.options);
    for (const auto& alloc : result.summary.allocations) {
        if (!approx_equal(alloc.a_claimed_kg() + alloc.a_unclaimed_kg(), alloc.e_star_kg)) {
            pass = false;
            detail = "claimed+unclaimed != share";
        }
    }
    report(5, "100%-rule enforcement (fixture exit codes and conservation)", pass, detail);
}

// 6. Rebound handling on the case-study fixture.
void criterion_6() {
    bool pass = true;
    std::string detail;
    CaseStudy cs;
    cs.id = "cs";
    for (int i = 0; i < 10; ++i) {
        cs.modified_usages.push_back({"u", {10, Unit::KgCO2e}, {2, Unit::KgCO2e},
                                      {1, Unit::KgCO2e}});
    }
    cs.rebound_usages.push_back({{0, Unit::KgCO2e}, {3, Unit::KgCO2e}});
    cs.rebound_usages.push_back({{0, Unit::KgCO2e}, {3, Unit::KgCO2e}});
    cs.quality_coefficient = 0.8;
    cs.extrapolation_scale = 1000;

    if (!approx_equal(case_study_effect(cs), 64.0)) {
        pass = false;
        detail = "study effect " + format_kg(case_study_effect(cs));
    }
    const auto diag = overstated_effect_diagnostic(cs);
    if (!approx_equal(diag.delta_kg, 20.0)) {
        pass = false;
        detail = "overstatement delta " + format_kg(diag.delta_kg);
    }
    const auto extrapolated =
        extrapolate_effect(cs, {1e6, Unit::KgCO2e}, Perspective::Present);
    if (!approx_equal(extrapolated.effect.kg, 5120.0)) {
        pass = false;
        detail = "extrapolated " + format_kg(extrapolated.effect.kg);
    }
    report(6, "rebound correctness (64 / delta 20 / 5120)", pass, detail);
}

// 7. Level separation: no combined field anywhere, and the fixture fails.
void criterion_7() {
    bool pass = true;
    std::string detail;
    auto doc = load_document(fixture("smart_metering.json"), true);
    auto report_json = machine_report(run_assessment(doc.portfolio, doc.options));
    const std::string dump = report_json.dump();
    for (const char* needle : {"c_total", "all_levels", "ab_total", "combined_total"}) {
        if (dump.find(needle) != std::string::npos) {
            pass = false;
            detail = std::string("forbidden key ") + needle;
        }
    }
    std::string output;
    const int rc = run_cli("assess " + fixture("level_mix.json") + " --out-dir " +
                               (fs::temp_directory_path() / "enact_accept_7").string(),
                           &output);
    if (rc != 1 || output.find("E-LEVEL-MIX") == std::string::npos) {
        pass = false;
        detail = "level-mix fixture: exit " + std::to_string(rc);
    }
    report(7, "level-separation guarantee (schema inspection and fixture)", pass, detail);
}

// 8. Byte-identical reports across CLI runs.
void criterion_8() {
    const fs::path dir1 = fs::temp_directory_path() / "enact_accept_8a";
    const fs::path dir2 = fs::temp_directory_path() / "enact_accept_8b";
    const int rc1 =
        run_cli("assess " + fixture("smart_metering.json") + " --out-dir " + dir1.string());
    const int rc2 =
        run_cli("assess " + fixture("smart_metering.json") + " --out-dir " + dir2.string());
    const std::string a = read_file(dir1 / "smart_metering.report.json");
    const std::string b = read_file(dir2 / "smart_metering.report.json");
    const bool pass = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    report(8, "determinism (byte-identical machine reports)", pass,
           "exits " + std::to_string(rc1) + "/" + std::to_string(rc2));
}

// 9. Slot-wise linearity of allocation, 1,000 random cases.
void criterion_9() {
    std::mt19937_64 rng(20260826);
    std::uniform_real_distribution<double> e_dist(-1e5, 1e6);
    bool pass = true;
    ICTService svc;
    svc.id = "svc";
    svc.innovator_identified = false;
    svc.building_blocks = {{"b0", "", {}}, {"b1", "", {}}, {"b2", "", {}}};
    std::vector<CompanyContribution> contributions{
        {"x", "svc", Level::A, {Role::Developer}, {}},
        {"y", "svc", Level::A, {Role::Owner, Role::Operator}, {}},
        {"x", "svc", Level::B, {Role::Developer, Role::Operator}, "b1"},
        {"z", "svc", Level::C, {}, {}},
    };
    for (int iter = 0; iter < 1000 && pass; ++iter) {
        const double e1 = e_dist(rng);
        const double e2 = e_dist(rng);
        auto a1 = allocate_service_activity(svc, "act", e1, contributions);
        auto a2 = allocate_service_activity(svc, "act", e2, contributions);
        auto sum = allocate_service_activity(svc, "act", e1 + e2, contributions);
        for (std::size_t i = 0; i < sum.a_slots.size(); ++i) {
            if (!approx_equal(sum.a_slots[i].amount_kg,
                              a1.a_slots[i].amount_kg + a2.a_slots[i].amount_kg)) {
                pass = false;
            }
        }
        for (std::size_t i = 0; i < sum.b_slots.size(); ++i) {
            if (!approx_equal(sum.b_slots[i].amount_kg,
                              a1.b_slots[i].amount_kg + a2.b_slots[i].amount_kg)) {
                pass = false;
            }
        }
    }
    report(9, "allocation linearity (1,000 random cases)", pass);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: enact_acceptance <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();

    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " acceptance criteria failed\n";
    return 1;
}
