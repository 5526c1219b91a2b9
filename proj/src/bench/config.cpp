#include "deduction/bench/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "config_json.hpp"
#include "deduction/agents/ises.hpp"
#include "deduction/agents/ismcts.hpp"
#include "deduction/agents/random_agent.hpp"
#include "deduction/errors.hpp"

namespace deduction::bench {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
    if (!obj.is_object()) throw ConfigError(where + " must be a JSON object");
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.count(key)) {
            throw ConfigError("unknown key \"" + key + "\" in " + where);
        }
    }
}

template <typename T>
T get_as(const json& obj, const std::string& key, const std::string& where) {
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(where + "." + key + ": " + e.what());
    }
}

template <typename T>
T get_or(const json& obj, const std::string& key, const std::string& where, T fallback) {
    if (!obj.contains(key)) return fallback;
    return get_as<T>(obj, key, where);
}

games::GameSpec parse_game(const json& obj, std::size_t index) {
    const std::string where = "games[" + std::to_string(index) + "]";
    require_keys(obj, {"name", "scale", "consistent_guesses_only", "dictionary"}, where);
    if (!obj.contains("name") || !obj.contains("scale")) {
        throw ConfigError(where + " needs \"name\" and \"scale\"");
    }
    games::GameSpec spec;
    spec.name = get_as<std::string>(obj, "name", where);
    spec.scale = get_as<std::string>(obj, "scale", where);
    spec.consistent_guesses_only = get_or<bool>(obj, "consistent_guesses_only", where, false);
    spec.dictionary_path = get_or<std::string>(obj, "dictionary", where, "");
    return spec;
}

AgentSpec parse_agent(const json& obj, std::size_t index) {
    const std::string where = "agents[" + std::to_string(index) + "]";
    if (!obj.is_object() || !obj.contains("name")) {
        throw ConfigError(where + " needs a \"name\"");
    }
    AgentSpec spec;
    spec.name = get_as<std::string>(obj, "name", where);
    if (spec.name == "random") {
        require_keys(obj, {"name", "label"}, where);
    } else if (spec.name == "full_ises") {
        require_keys(obj, {"name", "label", "parallel"}, where);
        spec.parallel = get_or<bool>(obj, "parallel", where, false);
    } else if (spec.name == "sampled_ises") {
        require_keys(obj, {"name", "label", "state_sample", "action_sample", "deadline_ms"},
                     where);
        // Omitted sample sizes mean "use every state / action"; the
        // wall-clock deadline is then the only budget, as in the
        // benchmark's reference configuration.
        if (obj.contains("state_sample"))
            spec.state_sample = get_as<std::size_t>(obj, "state_sample", where);
        if (obj.contains("action_sample"))
            spec.action_sample = get_as<std::size_t>(obj, "action_sample", where);
        spec.deadline_ms = get_or<double>(obj, "deadline_ms", where, 100.0);
    } else if (spec.name == "ismcts") {
        require_keys(obj, {"name", "label", "exploration", "rollout_cap", "deadline_ms"}, where);
        spec.exploration = get_or<double>(obj, "exploration", where, spec.exploration);
        spec.rollout_cap = get_or<int>(obj, "rollout_cap", where, 0);
        spec.deadline_ms = get_or<double>(obj, "deadline_ms", where, 100.0);
    } else {
        throw ConfigError(where + ": unknown agent \"" + spec.name + "\"");
    }
    spec.label = get_or<std::string>(obj, "label", where, spec.name);
    if (spec.deadline_ms && *spec.deadline_ms <= 0.0) {
        throw ConfigError(where + ": deadline_ms must be positive");
    }
    if (spec.state_sample && *spec.state_sample == 0) {
        throw ConfigError(where + ": state_sample must be at least 1");
    }
    if (spec.action_sample && *spec.action_sample == 0) {
        throw ConfigError(where + ": action_sample must be at least 1");
    }
    if (spec.exploration <= 0.0) {
        throw ConfigError(where + ": exploration must be positive");
    }
    if (spec.rollout_cap < 0) {
        throw ConfigError(where + ": rollout_cap must be non-negative");
    }
    return spec;
}

}  // namespace

void BenchmarkConfig::validate() const {
    if (games.empty()) throw ConfigError("config needs at least one game");
    if (agents.empty()) throw ConfigError("config needs at least one agent");
    if (trials < 1) throw ConfigError("trials must be at least 1");
    if (step_cap_multiplier <= 0.0) throw ConfigError("step_cap_multiplier must be positive");
    if (workers < 0) throw ConfigError("workers must be non-negative");
    if (output_dir.empty()) throw ConfigError("output_dir must be non-empty");
    std::set<std::string> labels;
    for (const AgentSpec& a : agents) {
        const std::string label = a.label.empty() ? a.name : a.label;
        if (!labels.insert(label).second) {
            throw ConfigError("duplicate agent label \"" + label + "\"");
        }
    }
}

BenchmarkConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    require_keys(root,
                 {"games", "agents", "trials", "master_seed", "step_cap_multiplier",
                  "output_dir", "workers", "record_timings", "write_traces", "decision_log"},
                 "config");
    for (const char* key : {"games", "agents", "master_seed"}) {
        if (!root.contains(key)) {
            throw ConfigError(std::string("config needs \"") + key + "\"");
        }
    }
    BenchmarkConfig config;
    if (!root["games"].is_array() || !root["agents"].is_array()) {
        throw ConfigError("\"games\" and \"agents\" must be arrays");
    }
    for (std::size_t i = 0; i < root["games"].size(); ++i) {
        config.games.push_back(parse_game(root["games"][i], i));
    }
    for (std::size_t i = 0; i < root["agents"].size(); ++i) {
        config.agents.push_back(parse_agent(root["agents"][i], i));
    }
    config.master_seed = get_as<std::uint64_t>(root, "master_seed", "config");
    config.trials = get_or<int>(root, "trials", "config", config.trials);
    config.step_cap_multiplier =
        get_or<double>(root, "step_cap_multiplier", "config", config.step_cap_multiplier);
    config.output_dir = get_or<std::string>(root, "output_dir", "config", config.output_dir);
    config.workers = get_or<int>(root, "workers", "config", config.workers);
    config.record_timings = get_or<bool>(root, "record_timings", "config", true);
    config.write_traces = get_or<bool>(root, "write_traces", "config", false);
    config.decision_log = get_or<std::string>(root, "decision_log", "config", "");
    config.validate();
    return config;
}

BenchmarkConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

const std::vector<std::string>& known_agents() {
    static const std::vector<std::string> names = {"random", "full_ises", "sampled_ises",
                                                   "ismcts"};
    return names;
}

std::unique_ptr<AgentPolicy> make_agent(const AgentSpec& spec) {
    if (spec.name == "random") {
        return std::make_unique<agents::RandomAgent>();
    }
    if (spec.name == "full_ises") {
        return std::make_unique<agents::FullIsesAgent>(spec.parallel);
    }
    if (spec.name == "sampled_ises") {
        agents::SamplerConfig cfg;
        cfg.state_sample = spec.state_sample;
        cfg.action_sample = spec.action_sample;
        cfg.deadline_ms = spec.deadline_ms;
        return std::make_unique<agents::SampledIsesAgent>(cfg);
    }
    if (spec.name == "ismcts") {
        agents::MctsConfig cfg;
        cfg.exploration = spec.exploration;
        cfg.rollout_cap = spec.rollout_cap;
        cfg.deadline_ms = spec.deadline_ms.value_or(100.0);
        return std::make_unique<agents::IsmctsAgent>(cfg);
    }
    throw ConfigError("unknown agent \"" + spec.name + "\"");
}

nlohmann::json config_to_json(const BenchmarkConfig& config) {
    json games = json::array();
    for (const games::GameSpec& g : config.games) {
        json obj{{"name", g.name}, {"scale", g.scale}};
        obj["consistent_guesses_only"] = g.consistent_guesses_only;
        if (!g.dictionary_path.empty()) obj["dictionary"] = g.dictionary_path;
        games.push_back(std::move(obj));
    }
    json agents = json::array();
    for (const AgentSpec& a : config.agents) {
        json obj{{"name", a.name}, {"label", a.label.empty() ? a.name : a.label}};
        if (a.name == "full_ises") obj["parallel"] = a.parallel;
        if (a.name == "sampled_ises") {
            if (a.state_sample) obj["state_sample"] = *a.state_sample;
            if (a.action_sample) obj["action_sample"] = *a.action_sample;
        }
        if (a.name == "ismcts") {
            obj["exploration"] = a.exploration;
            obj["rollout_cap"] = a.rollout_cap;
        }
        if (a.deadline_ms) obj["deadline_ms"] = *a.deadline_ms;
        agents.push_back(std::move(obj));
    }
    return json{{"games", std::move(games)},
                {"agents", std::move(agents)},
                {"trials", config.trials},
                {"master_seed", config.master_seed},
                {"step_cap_multiplier", config.step_cap_multiplier},
                {"output_dir", config.output_dir},
                {"workers", config.workers},
                {"record_timings", config.record_timings},
                {"write_traces", config.write_traces},
                {"decision_log", config.decision_log}};
}

}  // namespace deduction::bench
