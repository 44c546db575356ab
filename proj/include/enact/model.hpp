#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "enact/quantity.hpp"

namespace enact {

/// An activity with footprint FP that ICT services substitute or optimize.
struct ReferenceActivity {
    std::string id;
    std::string description;
    FootprintQuantity footprint;  // >= 0, canonical after ingestion
    // Usage counts are informational; the non-modified term cancels
    // analytically and is never computed.
    std::optional<long long> total_usages;
    std::optional<long long> unmodified_usages;
    // Optional externally supplied joint value, checked against the
    // residual composition to detect naive summation.
    std::optional<FootprintQuantity> declared_joint_effect;
};

/// One studied usage: the baseline footprint it replaces, the residual
/// activity footprint (zero for pure substitution) and the service cost.
struct UsageRecord {
    std::string usage_id;
    FootprintQuantity fp_activity;
    FootprintQuantity fp_residual_activity;
    FootprintQuantity fp_service;
};

/// A usage of the service with no avoided baseline.
struct ReboundUsage {
    FootprintQuantity fp_residual_activity;
    FootprintQuantity fp_service;
};

struct CaseStudy {
    std::string id;
    std::vector<UsageRecord> modified_usages;  // the studied set
    std::vector<ReboundUsage> rebound_usages;
    double quality_coefficient = 1.0;  // in (0, 1]
    long long extrapolation_scale = 0;  // target usage count, >= 0
    bool quality_coefficient_given = true;
};

enum class Mechanism { Substitution, Optimization };

/// How a service's effect on one activity is sourced.
struct EffectSource {
    enum class Kind { Direct, Model, CaseStudyRef };
    Kind kind = Kind::Direct;
    FootprintQuantity direct_value;        // Direct
    FootprintQuantity avg_per_usage;       // Model
    long long model_scale = 0;             // Model
    std::string case_study_id;             // CaseStudyRef
};

struct ServiceActivityEffect {
    std::string activity_id;
    Mechanism mechanism = Mechanism::Optimization;
    EffectSource source;
};

struct BuildingBlock {
    std::string id;
    std::string description;
    // Optional weight; when any block of a service carries one, all must,
    // and they must sum to 1. Default is an equal split.
    std::optional<double> weight;
};

struct ICTService {
    std::string id;
    std::string description;
    bool ict_is_key_enabler = true;
    bool embedded_only = false;
    bool innovator_identified = true;
    std::vector<ServiceActivityEffect> effects;
    std::vector<BuildingBlock> building_blocks;
};

enum class Role { Innovator, Developer, Owner, Operator };
inline constexpr std::array<Role, 4> kAllRoles = {Role::Innovator, Role::Developer,
                                                  Role::Owner, Role::Operator};

std::optional<Role> parse_role(std::string_view tag);
std::string_view role_tag(Role r);

enum class Level { A, B, C };

std::optional<Level> parse_level(std::string_view tag);
std::string_view level_tag(Level l);

/// A company's participation in one service, the unit of allocation.
struct CompanyContribution {
    std::string company_id;
    std::string service_id;
    Level level = Level::A;
    std::vector<Role> roles;  // nonempty for A/B; ignored for C
    std::optional<std::string> building_block_id;  // present iff level B
};

struct Company {
    std::string id;
    std::vector<CompanyContribution> contributions;
};

struct Portfolio {
    Perspective perspective = Perspective::Present;
    std::vector<ReferenceActivity> activities;
    std::vector<ICTService> services;
    std::vector<CaseStudy> case_studies;
    std::vector<Company> companies;

    const ReferenceActivity* find_activity(std::string_view id) const;
    const ICTService* find_service(std::string_view id) const;
    const CaseStudy* find_case_study(std::string_view id) const;
};

}  // namespace enact
