#include "enact/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "enact/errors.hpp"
#include "enact/quantity.hpp"

namespace enact {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& location, const std::string& message) {
    throw ParseError(location + ": " + message);
}

const json& require_key(const json& obj, const std::string& key, const std::string& location) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(location, "missing required key '" + key + "'");
    return *it;
}

std::string require_string(const json& obj, const std::string& key,
                           const std::string& location) {
    const json& v = require_key(obj, key, location);
    if (!v.is_string()) fail(location + "/" + key, "expected a string");
    return v.get<std::string>();
}

double require_number(const json& v, const std::string& location) {
    if (!v.is_number()) fail(location, "expected a number");
    return v.get<double>();
}

long long require_count(const json& v, const std::string& location) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        fail(location, "expected a nonnegative integer");
    }
    return v.get<long long>();
}

bool optional_bool(const json& obj, const std::string& key, bool fallback,
                   const std::string& location) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_boolean()) fail(location + "/" + key, "expected a boolean");
    return it->get<bool>();
}

struct KeyChecker {
    bool strict;
    std::vector<Finding>* warnings;

    void check(const json& obj, const std::set<std::string>& known,
               const std::string& location) const {
        if (!obj.is_object()) fail(location, "expected an object");
        for (const auto& [key, value] : obj.items()) {
            if (known.count(key)) continue;
            if (strict) fail(location, "unknown key '" + key + "'");
            warnings->push_back(Finding{Severity::Warning, "W-UNKNOWN-KEY",
                                        "ignoring unknown key '" + key + "'", location});
        }
    }
};

FootprintQuantity parse_quantity(const json& v, const std::string& location,
                                 const KeyChecker& keys, bool allow_negative) {
    keys.check(v, {"value", "unit"}, location);
    FootprintQuantity q;
    q.value = require_number(require_key(v, "value", location), location + "/value");
    const std::string unit = require_string(v, "unit", location);
    auto parsed = parse_unit(unit);
    if (!parsed) fail(location + "/unit", "unknown unit tag '" + unit + "'");
    q.unit = *parsed;
    if (!allow_negative && q.value < 0.0) {
        fail(location + "/value", "footprint must be nonnegative");
    }
    return q.to_canonical();
}

UsageRecord parse_usage(const json& v, std::size_t index, const std::string& location,
                        const KeyChecker& keys) {
    keys.check(v, {"usage_id", "fp_activity", "fp_residual_activity", "fp_service"}, location);
    UsageRecord u;
    u.usage_id = v.contains("usage_id") ? require_string(v, "usage_id", location)
                                        : "u" + std::to_string(index);
    u.fp_activity = parse_quantity(require_key(v, "fp_activity", location),
                                   location + "/fp_activity", keys, false);
    if (v.contains("fp_residual_activity")) {
        u.fp_residual_activity = parse_quantity(v.at("fp_residual_activity"),
                                                location + "/fp_residual_activity", keys,
                                                false);
    }
    u.fp_service = parse_quantity(require_key(v, "fp_service", location),
                                  location + "/fp_service", keys, false);
    return u;
}

CaseStudy parse_case_study(const json& v, const std::string& location,
                           const KeyChecker& keys) {
    keys.check(v,
               {"id", "quality_coefficient", "extrapolation_scale", "modified_usages",
                "rebound_usages"},
               location);
    CaseStudy cs;
    cs.id = require_string(v, "id", location);
    if (v.contains("quality_coefficient")) {
        cs.quality_coefficient =
            require_number(v.at("quality_coefficient"), location + "/quality_coefficient");
        if (!(cs.quality_coefficient > 0.0) || cs.quality_coefficient > 1.0) {
            fail(location + "/quality_coefficient", "must lie in (0, 1]");
        }
        cs.quality_coefficient_given = true;
    } else {
        cs.quality_coefficient = 1.0;
        cs.quality_coefficient_given = false;
    }
    cs.extrapolation_scale = require_count(
        require_key(v, "extrapolation_scale", location), location + "/extrapolation_scale");

    const json& usages = require_key(v, "modified_usages", location);
    if (!usages.is_array() || usages.empty()) {
        fail(location + "/modified_usages", "expected a nonempty array");
    }
    std::size_t i = 0;
    for (const auto& u : usages) {
        cs.modified_usages.push_back(
            parse_usage(u, i, location + "/modified_usages/" + std::to_string(i), keys));
        ++i;
    }
    if (v.contains("rebound_usages")) {
        const json& rebounds = v.at("rebound_usages");
        if (!rebounds.is_array()) fail(location + "/rebound_usages", "expected an array");
        i = 0;
        for (const auto& r : rebounds) {
            const std::string rloc = location + "/rebound_usages/" + std::to_string(i);
            keys.check(r, {"fp_residual_activity", "fp_service"}, rloc);
            ReboundUsage ru;
            if (r.contains("fp_residual_activity")) {
                ru.fp_residual_activity = parse_quantity(
                    r.at("fp_residual_activity"), rloc + "/fp_residual_activity", keys, false);
            }
            ru.fp_service = parse_quantity(require_key(r, "fp_service", rloc),
                                           rloc + "/fp_service", keys, false);
            cs.rebound_usages.push_back(std::move(ru));
            ++i;
        }
    }
    return cs;
}

EffectSource parse_source(const json& v, const std::string& location, const KeyChecker& keys) {
    const std::string type = require_string(v, "type", location);
    EffectSource src;
    if (type == "direct") {
        keys.check(v, {"type", "value"}, location);
        src.kind = EffectSource::Kind::Direct;
        src.direct_value =
            parse_quantity(require_key(v, "value", location), location + "/value", keys, true);
    } else if (type == "model") {
        keys.check(v, {"type", "avg_per_usage", "scale"}, location);
        src.kind = EffectSource::Kind::Model;
        src.avg_per_usage = parse_quantity(require_key(v, "avg_per_usage", location),
                                           location + "/avg_per_usage", keys, true);
        src.model_scale =
            require_count(require_key(v, "scale", location), location + "/scale");
    } else if (type == "case_study") {
        keys.check(v, {"type", "case_study_id"}, location);
        src.kind = EffectSource::Kind::CaseStudyRef;
        src.case_study_id = require_string(v, "case_study_id", location);
    } else {
        fail(location + "/type", "unknown effect source type '" + type + "'");
    }
    return src;
}

ICTService parse_service(const json& v, const std::string& location, const KeyChecker& keys) {
    keys.check(v,
               {"id", "description", "ict_is_key_enabler", "embedded_only",
                "innovator_identified", "building_blocks", "effects"},
               location);
    ICTService s;
    s.id = require_string(v, "id", location);
    if (v.contains("description")) s.description = require_string(v, "description", location);
    const json& key_enabler = require_key(v, "ict_is_key_enabler", location);
    if (!key_enabler.is_boolean()) {
        fail(location + "/ict_is_key_enabler", "expected a boolean");
    }
    s.ict_is_key_enabler = key_enabler.get<bool>();
    s.embedded_only = optional_bool(v, "embedded_only", false, location);
    s.innovator_identified = optional_bool(v, "innovator_identified", true, location);

    if (v.contains("building_blocks")) {
        const json& blocks = v.at("building_blocks");
        if (!blocks.is_array()) fail(location + "/building_blocks", "expected an array");
        std::size_t i = 0;
        for (const auto& b : blocks) {
            const std::string bloc = location + "/building_blocks/" + std::to_string(i);
            keys.check(b, {"id", "description", "weight"}, bloc);
            BuildingBlock bb;
            bb.id = require_string(b, "id", bloc);
            if (b.contains("description")) bb.description = require_string(b, "description", bloc);
            if (b.contains("weight")) {
                bb.weight = require_number(b.at("weight"), bloc + "/weight");
            }
            s.building_blocks.push_back(std::move(bb));
            ++i;
        }
    }

    const json& effects = require_key(v, "effects", location);
    if (!effects.is_array()) fail(location + "/effects", "expected an array");
    std::size_t i = 0;
    for (const auto& e : effects) {
        const std::string eloc = location + "/effects/" + std::to_string(i);
        keys.check(e, {"activity_id", "mechanism", "source"}, eloc);
        ServiceActivityEffect eff;
        eff.activity_id = require_string(e, "activity_id", eloc);
        const std::string mech = require_string(e, "mechanism", eloc);
        if (mech == "substitution") {
            eff.mechanism = Mechanism::Substitution;
        } else if (mech == "optimization") {
            eff.mechanism = Mechanism::Optimization;
        } else {
            fail(eloc + "/mechanism", "unknown mechanism '" + mech + "'");
        }
        eff.source = parse_source(require_key(e, "source", eloc), eloc + "/source", keys);
        s.effects.push_back(std::move(eff));
        ++i;
    }
    return s;
}

CompanyContribution parse_contribution(const json& v, const std::string& company_id,
                                       const std::string& location, const KeyChecker& keys,
                                       bool with_company_id) {
    std::set<std::string> known = {"service_id", "level", "roles", "building_block_id"};
    if (with_company_id) known.insert("company_id");
    keys.check(v, known, location);
    CompanyContribution c;
    c.company_id = with_company_id ? require_string(v, "company_id", location) : company_id;
    c.service_id = require_string(v, "service_id", location);
    const std::string level = require_string(v, "level", location);
    auto parsed_level = parse_level(level);
    if (!parsed_level) fail(location + "/level", "unknown level '" + level + "'");
    c.level = *parsed_level;

    if (v.contains("roles")) {
        const json& roles = v.at("roles");
        if (!roles.is_array()) fail(location + "/roles", "expected an array");
        for (const auto& r : roles) {
            if (!r.is_string()) fail(location + "/roles", "expected role tags");
            auto role = parse_role(r.get<std::string>());
            if (!role) fail(location + "/roles", "unknown role '" + r.get<std::string>() + "'");
            c.roles.push_back(*role);
        }
    }
    if (c.level != Level::C && c.roles.empty()) {
        fail(location, "A- and B-level contributions need a nonempty role set");
    }
    if (v.contains("building_block_id")) {
        c.building_block_id = require_string(v, "building_block_id", location);
    }
    if (c.level == Level::B && !c.building_block_id) {
        fail(location, "B-level contributions must name a building block");
    }
    if (c.level != Level::B && c.building_block_id) {
        fail(location, "building_block_id is only valid for B-level contributions");
    }
    return c;
}

void validate_cross_references(const Portfolio& p) {
    std::set<std::string> ids;
    for (const auto& a : p.activities) {
        if (!ids.insert(a.id).second) fail("activities", "duplicate activity id '" + a.id + "'");
    }
    ids.clear();
    for (const auto& s : p.services) {
        if (!ids.insert(s.id).second) fail("services", "duplicate service id '" + s.id + "'");
        std::set<std::string> blocks;
        for (const auto& b : s.building_blocks) {
            if (!blocks.insert(b.id).second) {
                fail("services/" + s.id, "duplicate building block id '" + b.id + "'");
            }
        }
        std::set<std::string> targets;
        for (const auto& e : s.effects) {
            if (!p.find_activity(e.activity_id)) {
                fail("services/" + s.id, "effect references unknown activity '" +
                                             e.activity_id + "'");
            }
            if (!targets.insert(e.activity_id).second) {
                fail("services/" + s.id,
                     "duplicate effect on activity '" + e.activity_id + "'");
            }
            if (e.source.kind == EffectSource::Kind::CaseStudyRef &&
                !p.find_case_study(e.source.case_study_id)) {
                fail("services/" + s.id, "effect references unknown case study '" +
                                             e.source.case_study_id + "'");
            }
        }
    }
    ids.clear();
    for (const auto& cs : p.case_studies) {
        if (!ids.insert(cs.id).second) {
            fail("case_studies", "duplicate case study id '" + cs.id + "'");
        }
    }
    ids.clear();
    for (const auto& co : p.companies) {
        if (!ids.insert(co.id).second) {
            fail("companies", "duplicate company id '" + co.id + "'");
        }
        for (const auto& c : co.contributions) {
            const ICTService* svc = p.find_service(c.service_id);
            if (!svc) {
                fail("companies/" + co.id,
                     "contribution references unknown service '" + c.service_id + "'");
            }
            if (c.building_block_id) {
                const bool found = std::any_of(
                    svc->building_blocks.begin(), svc->building_blocks.end(),
                    [&](const BuildingBlock& b) { return b.id == *c.building_block_id; });
                if (!found) {
                    fail("companies/" + co.id, "contribution references unknown building "
                                               "block '" +
                                                   *c.building_block_id + "' of service '" +
                                                   c.service_id + "'");
                }
            }
        }
    }
}

}  // namespace

ParsedDocument parse_document(const std::string& json_text, bool strict) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into line/column.
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < json_text.size(); ++i) {
            if (json_text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + e.what());
    }

    ParsedDocument parsed;
    KeyChecker keys{strict, &parsed.parse_warnings};
    keys.check(doc,
               {"schema_version", "perspective", "activities", "services", "companies",
                "case_studies", "contributions", "output_options"},
               "document");

    const std::string version = require_string(doc, "schema_version", "document");
    if (version != "1") fail("document/schema_version", "unsupported version '" + version + "'");

    const std::string perspective = require_string(doc, "perspective", "document");
    auto parsed_perspective = parse_perspective(perspective);
    if (!parsed_perspective) {
        fail("document/perspective", "unknown time perspective '" + perspective + "'");
    }
    Portfolio& p = parsed.portfolio;
    p.perspective = *parsed_perspective;

    const json& activities = require_key(doc, "activities", "document");
    if (!activities.is_array()) fail("document/activities", "expected an array");
    std::size_t i = 0;
    for (const auto& a : activities) {
        const std::string loc = "activities/" + std::to_string(i);
        keys.check(a,
                   {"id", "description", "footprint", "perspective", "total_usages",
                    "unmodified_usages", "declared_joint_effect"},
                   loc);
        ReferenceActivity act;
        act.id = require_string(a, "id", loc);
        if (a.contains("description")) act.description = require_string(a, "description", loc);
        act.footprint =
            parse_quantity(require_key(a, "footprint", loc), loc + "/footprint", keys, false);
        if (a.contains("perspective")) {
            const std::string tag = require_string(a, "perspective", loc);
            auto ap = parse_perspective(tag);
            if (!ap) fail(loc + "/perspective", "unknown time perspective '" + tag + "'");
            if (*ap != p.perspective) {
                fail(loc + "/perspective",
                     "activity perspective differs from the document perspective");
            }
        }
        if (a.contains("total_usages")) {
            act.total_usages = require_count(a.at("total_usages"), loc + "/total_usages");
        }
        if (a.contains("unmodified_usages")) {
            act.unmodified_usages =
                require_count(a.at("unmodified_usages"), loc + "/unmodified_usages");
        }
        if (a.contains("declared_joint_effect")) {
            act.declared_joint_effect = parse_quantity(
                a.at("declared_joint_effect"), loc + "/declared_joint_effect", keys, true);
        }
        p.activities.push_back(std::move(act));
        ++i;
    }

    if (doc.contains("case_studies")) {
        const json& studies = doc.at("case_studies");
        if (!studies.is_array()) fail("document/case_studies", "expected an array");
        i = 0;
        for (const auto& cs : studies) {
            p.case_studies.push_back(
                parse_case_study(cs, "case_studies/" + std::to_string(i), keys));
            ++i;
        }
    }

    const json& services = require_key(doc, "services", "document");
    if (!services.is_array()) fail("document/services", "expected an array");
    i = 0;
    for (const auto& s : services) {
        p.services.push_back(parse_service(s, "services/" + std::to_string(i), keys));
        ++i;
    }

    const json& companies = require_key(doc, "companies", "document");
    if (!companies.is_array()) fail("document/companies", "expected an array");
    i = 0;
    for (const auto& c : companies) {
        const std::string loc = "companies/" + std::to_string(i);
        keys.check(c, {"id", "contributions"}, loc);
        Company company;
        company.id = require_string(c, "id", loc);
        if (c.contains("contributions")) {
            const json& contribs = c.at("contributions");
            if (!contribs.is_array()) fail(loc + "/contributions", "expected an array");
            std::size_t j = 0;
            for (const auto& contrib : contribs) {
                company.contributions.push_back(parse_contribution(
                    contrib, company.id, loc + "/contributions/" + std::to_string(j), keys,
                    false));
                ++j;
            }
        }
        p.companies.push_back(std::move(company));
        ++i;
    }

    if (doc.contains("contributions")) {
        const json& contribs = doc.at("contributions");
        if (!contribs.is_array()) fail("document/contributions", "expected an array");
        i = 0;
        for (const auto& contrib : contribs) {
            const std::string loc = "contributions/" + std::to_string(i);
            CompanyContribution c = parse_contribution(contrib, "", loc, keys, true);
            auto it = std::find_if(p.companies.begin(), p.companies.end(),
                                   [&](const Company& co) { return co.id == c.company_id; });
            if (it == p.companies.end()) {
                fail(loc, "contribution references unknown company '" + c.company_id + "'");
            }
            it->contributions.push_back(std::move(c));
            ++i;
        }
    }

    if (doc.contains("output_options")) {
        const json& opts = doc.at("output_options");
        keys.check(opts, {"digits", "sections"}, "output_options");
        if (opts.contains("digits")) {
            const long long digits = require_count(opts.at("digits"), "output_options/digits");
            if (digits > 12) fail("output_options/digits", "at most 12 digits supported");
            parsed.options.digits = static_cast<int>(digits);
        }
        if (opts.contains("sections")) {
            const json& sections = opts.at("sections");
            if (!sections.is_array()) fail("output_options/sections", "expected an array");
            for (const auto& s : sections) {
                if (!s.is_string()) fail("output_options/sections", "expected strings");
                parsed.options.sections.push_back(s.get<std::string>());
            }
        }
    }

    validate_cross_references(p);
    return parsed;
}

ParsedDocument load_document(const std::filesystem::path& path, bool strict) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str(), strict);
}

}  // namespace enact
