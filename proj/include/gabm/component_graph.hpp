#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gabm {

// Well-known component ids. Configs may add others; these are the ones the
// engine itself has expectations about.
inline constexpr const char* kObservationSummary = "ObservationSummary";
inline constexpr const char* kSituationAssessment = "SituationAssessment";

/// One cognitive component: a prompt template plus the components whose
/// outputs are concatenated into its prompt.
struct ComponentSpec {
    std::string id;
    std::string prompt_template;
    std::vector<std::string> deps; // ordered
};

/// A named agent architecture: components, the edges into the decision step,
/// and the decision-reflection template.
struct ArchitectureConfig {
    std::string name;
    std::vector<ComponentSpec> components;  // declaration order is the tie-break order
    std::vector<std::string> action_deps;   // ordered; subset of component ids
    std::string decision_template;

    const ComponentSpec* find(const std::string& id) const;

    /// Enforces: unique ids, deps/action_deps reference existing components,
    /// ObservationSummary present, the Base architecture restricted to its two
    /// components, and acyclicity.
    void validate() const;
};

/// Dependency-respecting evaluation order. Stable: components with no
/// ordering constraint between them keep declaration order. Throws
/// CycleError / UnknownDependencyError.
std::vector<std::string> topo_order(const ArchitectureConfig& config);

ArchitectureConfig architecture_from_json(const nlohmann::json& j);
nlohmann::json architecture_to_json(const ArchitectureConfig& config);

/// Load a file of named architectures ({"architectures": [...]}), validated.
std::map<std::string, ArchitectureConfig> load_architectures(const std::filesystem::path& file);

} // namespace gabm
