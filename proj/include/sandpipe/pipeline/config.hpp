#pragma once
// Pipeline configuration: JSON file with nesting, every key optional, every
// unknown key fatal. Validation names the offending key. The fully-defaulted
// snapshot (not the raw file) is what gets digested into the run manifest,
// so formatting changes do not count as config drift but value changes do.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sandpipe/errors.hpp"
#include "sandpipe/providers/types.hpp"
#include "sandpipe/util/digest.hpp"
#include "sandpipe/util/io.hpp"
#include "sandpipe/util/strings.hpp"

namespace sandpipe {

enum class Role { teacher, judge, solver, embedder, search };

inline std::string_view to_string(Role role) {
    switch (role) {
        case Role::teacher: return "teacher";
        case Role::judge: return "judge";
        case Role::solver: return "solver";
        case Role::embedder: return "embedder";
        case Role::search: return "search";
    }
    return "?";
}

inline const std::vector<Role>& all_roles() {
    static const std::vector<Role> roles = {Role::teacher, Role::judge, Role::solver,
                                            Role::embedder, Role::search};
    return roles;
}

struct RoleConfig {
    ProviderConfig provider;
    std::string model;
};

struct BenchmarkSource {
    std::string name;
    std::string path;
};

struct PipelineConfig {
    std::uint64_t seed = 0;
    bool mock = false;
    int k_solutions = 2;
    int rating_runs = 3;
    int novelty_k = 10;
    int decontam_neighbors = 5;
    int solver_attempts = 1;
    double hike_target = 8.0;
    double dedup_threshold = 0.99;
    double novelty_tau = 0.85;
    double question_temperature = 0.8;
    double solution_temperature = 0.6;
    double solver_temperature = 0.0;
    size_t max_records = 100;
    size_t max_concurrent = 8;
    std::map<std::string, RoleConfig> providers;  // keyed by role name
    std::vector<BenchmarkSource> benchmarks;
    std::optional<std::string> taxonomy_path;

    const RoleConfig& role(Role r) const {
        static const RoleConfig empty{};
        auto it = providers.find(std::string(to_string(r)));
        return it == providers.end() ? empty : it->second;
    }

    // Fully-defaulted snapshot; object keys serialize sorted, so the dump is
    // canonical.
    nlohmann::json snapshot() const {
        nlohmann::json doc;
        doc["seed"] = seed;
        doc["mock"] = mock;
        doc["k_solutions"] = k_solutions;
        doc["rating_runs"] = rating_runs;
        doc["novelty_k"] = novelty_k;
        doc["decontam_neighbors"] = decontam_neighbors;
        doc["solver_attempts"] = solver_attempts;
        doc["hike_target"] = hike_target;
        doc["thresholds"] = {{"dedup", dedup_threshold}, {"novelty_tau", novelty_tau}};
        doc["temperatures"] = {{"question", question_temperature},
                               {"solution", solution_temperature},
                               {"solver", solver_temperature}};
        doc["limits"] = {{"max_records", max_records}, {"max_concurrent", max_concurrent}};
        nlohmann::json providers_doc = nlohmann::json::object();
        for (const auto& [name, rc] : providers) {
            providers_doc[name] = {{"endpoint_url", rc.provider.endpoint_url},
                                   {"model", rc.model},
                                   {"api_key_env", rc.provider.api_key_env},
                                   {"timeout_ms", rc.provider.timeout_ms},
                                   {"max_retries", rc.provider.max_retries},
                                   {"backoff_base_ms", rc.provider.backoff_base_ms},
                                   {"max_concurrent", rc.provider.max_concurrent}};
        }
        doc["providers"] = providers_doc;
        nlohmann::json bench_doc = nlohmann::json::array();
        for (const auto& b : benchmarks) bench_doc.push_back({{"name", b.name}, {"path", b.path}});
        doc["benchmarks"] = bench_doc;
        if (taxonomy_path) doc["taxonomy_path"] = *taxonomy_path;
        return doc;
    }

    std::string digest() const { return sha256_hex(snapshot().dump()); }
};

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& obj, const std::vector<std::string>& known,
                                const std::string& prefix) {
    if (!obj.is_object()) {
        throw Error(ErrorCode::validation_error,
                    (prefix.empty() ? std::string("config") : prefix) + " must be an object");
    }
    for (const auto& [key, _] : obj.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw Error(ErrorCode::validation_error, "unknown key: " + prefix + key);
        }
    }
}

template <typename T>
void read_number(const nlohmann::json& obj, const char* key, T& out, const std::string& prefix) {
    if (!obj.contains(key)) return;
    if (!obj[key].is_number()) {
        throw Error(ErrorCode::validation_error, prefix + key + " must be a number");
    }
    out = obj[key].get<T>();
}

inline void require(bool condition, const std::string& key, const std::string& what) {
    if (!condition) throw Error(ErrorCode::validation_error, key + " " + what);
}

inline RoleConfig parse_role(const nlohmann::json& obj, const std::string& prefix) {
    reject_unknown_keys(obj,
                        {"endpoint_url", "model", "api_key_env", "timeout_ms", "max_retries",
                         "backoff_base_ms", "max_concurrent"},
                        prefix);
    RoleConfig rc;
    rc.provider.endpoint_url = obj.value("endpoint_url", "");
    rc.model = obj.value("model", "");
    rc.provider.api_key_env = obj.value("api_key_env", "");
    read_number(obj, "timeout_ms", rc.provider.timeout_ms, prefix);
    read_number(obj, "max_retries", rc.provider.max_retries, prefix);
    read_number(obj, "backoff_base_ms", rc.provider.backoff_base_ms, prefix);
    read_number(obj, "max_concurrent", rc.provider.max_concurrent, prefix);
    require(rc.provider.max_retries >= 0, prefix + "max_retries", "must be >= 0");
    require(rc.provider.max_concurrent >= 1, prefix + "max_concurrent", "must be >= 1");
    return rc;
}

}  // namespace detail

inline PipelineConfig parse_config(const nlohmann::json& doc) {
    if (!doc.is_object()) throw Error(ErrorCode::parse_error, "config must be a JSON object");
    detail::reject_unknown_keys(
        doc,
        {"seed", "mock", "k_solutions", "rating_runs", "novelty_k", "decontam_neighbors",
         "solver_attempts", "hike_target", "thresholds", "temperatures", "limits", "providers",
         "benchmarks", "taxonomy_path"},
        "");

    PipelineConfig config;
    detail::read_number(doc, "seed", config.seed, "");
    if (doc.contains("mock")) {
        if (!doc["mock"].is_boolean()) {
            throw Error(ErrorCode::validation_error, "mock must be a boolean");
        }
        config.mock = doc["mock"].get<bool>();
    }
    detail::read_number(doc, "k_solutions", config.k_solutions, "");
    detail::read_number(doc, "rating_runs", config.rating_runs, "");
    detail::read_number(doc, "novelty_k", config.novelty_k, "");
    detail::read_number(doc, "decontam_neighbors", config.decontam_neighbors, "");
    detail::read_number(doc, "solver_attempts", config.solver_attempts, "");
    detail::read_number(doc, "hike_target", config.hike_target, "");

    if (doc.contains("thresholds")) {
        const auto& t = doc["thresholds"];
        detail::reject_unknown_keys(t, {"dedup", "novelty_tau"}, "thresholds.");
        detail::read_number(t, "dedup", config.dedup_threshold, "thresholds.");
        detail::read_number(t, "novelty_tau", config.novelty_tau, "thresholds.");
    }
    if (doc.contains("temperatures")) {
        const auto& t = doc["temperatures"];
        detail::reject_unknown_keys(t, {"question", "solution", "solver"}, "temperatures.");
        detail::read_number(t, "question", config.question_temperature, "temperatures.");
        detail::read_number(t, "solution", config.solution_temperature, "temperatures.");
        detail::read_number(t, "solver", config.solver_temperature, "temperatures.");
    }
    if (doc.contains("limits")) {
        const auto& l = doc["limits"];
        detail::reject_unknown_keys(l, {"max_records", "max_concurrent"}, "limits.");
        detail::read_number(l, "max_records", config.max_records, "limits.");
        detail::read_number(l, "max_concurrent", config.max_concurrent, "limits.");
    }
    if (doc.contains("providers")) {
        const auto& p = doc["providers"];
        detail::reject_unknown_keys(p, {"teacher", "judge", "solver", "embedder", "search"},
                                    "providers.");
        for (const auto& [name, entry] : p.items()) {
            config.providers[name] = detail::parse_role(entry, "providers." + name + ".");
        }
    }
    if (doc.contains("benchmarks")) {
        if (!doc["benchmarks"].is_array()) {
            throw Error(ErrorCode::validation_error, "benchmarks must be an array");
        }
        for (const auto& entry : doc["benchmarks"]) {
            detail::reject_unknown_keys(entry, {"name", "path"}, "benchmarks[].");
            BenchmarkSource source;
            source.name = entry.value("name", "");
            source.path = entry.value("path", "");
            detail::require(!source.name.empty(), "benchmarks[].name", "must be non-empty");
            detail::require(!source.path.empty(), "benchmarks[].path", "must be non-empty");
            config.benchmarks.push_back(std::move(source));
        }
    }
    if (doc.contains("taxonomy_path")) {
        config.taxonomy_path = doc["taxonomy_path"].get<std::string>();
    }

    detail::require(config.dedup_threshold > 0 && config.dedup_threshold <= 1,
                    "thresholds.dedup", "must be in (0, 1]");
    detail::require(config.novelty_tau > 0 && config.novelty_tau <= 1, "thresholds.novelty_tau",
                    "must be in (0, 1]");
    detail::require(config.k_solutions >= 1, "k_solutions", "must be >= 1");
    detail::require(config.rating_runs >= 1, "rating_runs", "must be >= 1");
    detail::require(config.novelty_k >= 1, "novelty_k", "must be >= 1");
    detail::require(config.decontam_neighbors >= 1, "decontam_neighbors", "must be >= 1");
    detail::require(config.solver_attempts >= 1, "solver_attempts", "must be >= 1");
    detail::require(config.hike_target >= 1.0 && config.hike_target <= 10.0, "hike_target",
                    "must be in [1, 10]");
    detail::require(config.question_temperature >= 0, "temperatures.question", "must be >= 0");
    detail::require(config.solution_temperature >= 0, "temperatures.solution", "must be >= 0");
    detail::require(config.solver_temperature >= 0, "temperatures.solver", "must be >= 0");
    detail::require(config.max_records >= 1, "limits.max_records", "must be >= 1");
    detail::require(config.max_concurrent >= 1, "limits.max_concurrent", "must be >= 1");
    return config;
}

/// Loads and validates a config file. A missing/blank body means all
/// defaults.
inline PipelineConfig load_config(const fs::path& path) {
    std::string body = read_file(path);
    if (trim(body).empty()) return parse_config(nlohmann::json::object());
    auto doc = nlohmann::json::parse(body, nullptr, false);
    if (doc.is_discarded()) {
        throw Error(ErrorCode::parse_error, "config is not valid JSON: " + path.string());
    }
    return parse_config(doc);
}

}  // namespace sandpipe
