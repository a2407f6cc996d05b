#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gabm/text_template.hpp"

namespace gabm {

/// Stable individual-difference profile. Injected into prompts and, for the
/// scripted policy, the source of the cooperation tendency.
struct Persona {
    std::string name;
    int age = 0;
    std::string gender;
    std::string occupation;
    std::string background;
    std::string traits;
    double cooperation_tendency = 0.5; // in [0, 1]

    /// Template variables under the "persona." prefix plus "agent_name".
    TemplateVars prompt_fields() const;
};

void validate_persona(const Persona& p);

nlohmann::json persona_to_json(const Persona& p);
Persona persona_from_json(const nlohmann::json& j);

/// Load and validate a persona pool file (JSON array, order preserved).
std::vector<Persona> load_personas(const std::filesystem::path& file);
void save_personas(const std::vector<Persona>& pool, const std::filesystem::path& file);

/// Deterministically draw n personas from the pool. Without replacement while
/// n <= pool size; with replacement beyond that, giving duplicates a
/// uniqueness suffix so rendered names never collide.
std::vector<Persona> assign_personas(const std::vector<Persona>& pool, int n, std::uint64_t seed);

/// Grow a pool to `target` entries from a fixed name/occupation/trait lexicon
/// crossed with a cooperation-tendency grid. Deterministic given seed; the
/// input personas are kept first, in order.
std::vector<Persona> expand_pool(std::vector<Persona> base, int target, std::uint64_t seed);

/// Short human-readable tendency like "0.9" (used in prompt text).
std::string format_tendency(double t);

} // namespace gabm
