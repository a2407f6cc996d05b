#include "gabm/component_graph.hpp"

#include <fstream>
#include <set>

#include "gabm/errors.hpp"

namespace gabm {

const ComponentSpec* ArchitectureConfig::find(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

void ArchitectureConfig::validate() const {
    std::set<std::string> ids;
    for (const auto& c : components) {
        if (c.id.empty()) throw ConfigError("architecture '" + name + "': component with empty id");
        if (!ids.insert(c.id).second)
            throw ConfigError("architecture '" + name + "': duplicate component id '" + c.id + "'");
    }
    for (const auto& c : components)
        for (const auto& d : c.deps)
            if (!ids.count(d)) throw UnknownDependencyError(c.id, d);
    for (const auto& d : action_deps)
        if (!ids.count(d))
            throw ConfigError("architecture '" + name + "': action dep '" + d + "' is not a component");
    if (!ids.count(kObservationSummary))
        throw ConfigError("architecture '" + name + "': missing " + std::string(kObservationSummary));
    if (name == "Base") {
        if (components.size() != 2 || !ids.count(kSituationAssessment))
            throw ConfigError("Base architecture must contain exactly ObservationSummary and SituationAssessment");
    }
    topo_order(*this); // throws CycleError on a cyclic graph
}

std::vector<std::string> topo_order(const ArchitectureConfig& config) {
    const std::size_t n = config.components.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[config.components[i].id] = i;

    std::vector<std::size_t> indegree(n, 0);
    std::vector<std::vector<std::size_t>> dependents(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& dep : config.components[i].deps) {
            auto it = index.find(dep);
            if (it == index.end()) throw UnknownDependencyError(config.components[i].id, dep);
            dependents[it->second].push_back(i);
            ++indegree[i];
        }
    }

    // Kahn's algorithm, scanning ready nodes in declaration order each round
    // so the result is deterministic for a given config.
    std::vector<std::string> order;
    order.reserve(n);
    std::vector<bool> emitted(n, false);
    for (std::size_t done = 0; done < n;) {
        bool progressed = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (emitted[i] || indegree[i] != 0) continue;
            emitted[i] = true;
            order.push_back(config.components[i].id);
            for (std::size_t d : dependents[i]) --indegree[d];
            ++done;
            progressed = true;
            break;
        }
        if (!progressed) {
            // Every remaining node still has an unemitted dependency, so
            // following those edges from any of them must loop. Record the
            // walk; the cycle is the suffix from the first revisited node.
            std::size_t cur = 0;
            while (emitted[cur]) ++cur;
            std::vector<std::size_t> path;
            std::map<std::size_t, std::size_t> pos;
            while (!pos.count(cur)) {
                pos[cur] = path.size();
                path.push_back(cur);
                for (const auto& dep : config.components[cur].deps) {
                    std::size_t d = index[dep];
                    if (!emitted[d]) {
                        cur = d;
                        break;
                    }
                }
            }
            std::vector<std::string> cycle;
            for (std::size_t k = pos[cur]; k < path.size(); ++k)
                cycle.push_back(config.components[path[k]].id);
            throw CycleError(cycle);
        }
    }
    return order;
}

ArchitectureConfig architecture_from_json(const nlohmann::json& j) {
    ArchitectureConfig config;
    config.name = j.at("name").get<std::string>();
    for (const auto& cj : j.at("components")) {
        ComponentSpec c;
        c.id = cj.at("id").get<std::string>();
        c.prompt_template = cj.at("prompt_template").get<std::string>();
        if (cj.contains("deps"))
            for (const auto& d : cj["deps"]) c.deps.push_back(d.get<std::string>());
        config.components.push_back(std::move(c));
    }
    for (const auto& d : j.at("action_deps")) config.action_deps.push_back(d.get<std::string>());
    config.decision_template = j.at("decision_template").get<std::string>();
    return config;
}

nlohmann::json architecture_to_json(const ArchitectureConfig& config) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : config.components) {
        comps.push_back({
            {"id", c.id},
            {"prompt_template", c.prompt_template},
            {"deps", c.deps},
        });
    }
    return nlohmann::json{
        {"name", config.name},
        {"components", comps},
        {"action_deps", config.action_deps},
        {"decision_template", config.decision_template},
    };
}

std::map<std::string, ArchitectureConfig> load_architectures(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open architecture file: " + file.string());
    nlohmann::json doc = nlohmann::json::parse(in);
    std::map<std::string, ArchitectureConfig> out;
    for (const auto& aj : doc.at("architectures")) {
        ArchitectureConfig config = architecture_from_json(aj);
        config.validate();
        if (out.count(config.name))
            throw ConfigError("duplicate architecture name '" + config.name + "'");
        out.emplace(config.name, std::move(config));
    }
    return out;
}

} // namespace gabm
