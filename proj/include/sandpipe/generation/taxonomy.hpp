#pragma once
// Taxonomy handling: loading, validation, and branch sampling. Branches map
// to ordered topic lists; each topic carries tools/concepts and theorems.
// Sampling for question generation draws a primary branch uniformly and a
// distinct secondary branch uniformly from the rest.

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sandpipe/errors.hpp"
#include "sandpipe/generation/default_taxonomy.hpp"
#include "sandpipe/util/io.hpp"
#include "sandpipe/util/rng.hpp"

namespace sandpipe {

struct Topic {
    std::string name;
    std::vector<std::string> tools_concepts;
    std::vector<std::string> theorems;
};

struct Taxonomy {
    // std::map keeps branch iteration order stable across platforms.
    std::map<std::string, std::vector<Topic>> branches;

    std::vector<std::string> branch_names() const {
        std::vector<std::string> names;
        names.reserve(branches.size());
        for (const auto& [name, _] : branches) names.push_back(name);
        return names;
    }

    bool has_branch(const std::string& name) const { return branches.count(name) > 0; }

    // Union of theorem lists across all topics of the branch.
    std::vector<std::string> branch_theorems(const std::string& branch) const {
        auto it = branches.find(branch);
        if (it == branches.end()) throw Error(ErrorCode::unknown_branch, branch);
        std::vector<std::string> pool;
        for (const auto& topic : it->second) {
            pool.insert(pool.end(), topic.theorems.begin(), topic.theorems.end());
        }
        return pool;
    }

    std::vector<std::string> branch_tools(const std::string& branch) const {
        auto it = branches.find(branch);
        if (it == branches.end()) throw Error(ErrorCode::unknown_branch, branch);
        std::vector<std::string> pool;
        for (const auto& topic : it->second) {
            pool.insert(pool.end(), topic.tools_concepts.begin(), topic.tools_concepts.end());
        }
        return pool;
    }

    void validate() const {
        if (branches.empty()) throw Error(ErrorCode::empty_taxonomy, "no branches");
        for (const auto& [branch, topics] : branches) {
            if (topics.empty()) {
                throw Error(ErrorCode::validation_error, "branch has no topics: " + branch);
            }
            if (branch_tools(branch).empty()) {
                throw Error(ErrorCode::validation_error, "branch has no tools/concepts: " + branch);
            }
            if (branch_theorems(branch).empty()) {
                throw Error(ErrorCode::validation_error, "branch has no theorems: " + branch);
            }
        }
    }
};

inline Taxonomy parse_taxonomy(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("branches") || !doc["branches"].is_object()) {
        throw Error(ErrorCode::parse_error, "taxonomy needs a top-level branches object");
    }
    Taxonomy taxonomy;
    for (const auto& [branch, topics] : doc["branches"].items()) {
        if (!topics.is_array()) {
            throw Error(ErrorCode::parse_error, "branch must hold a topic array: " + branch);
        }
        std::vector<Topic> parsed;
        for (const auto& topic : topics) {
            Topic t;
            t.name = topic.value("name", "");
            if (t.name.empty()) {
                throw Error(ErrorCode::parse_error, "topic without name in branch " + branch);
            }
            t.tools_concepts = topic.value("tools_concepts", std::vector<std::string>{});
            t.theorems = topic.value("theorems", std::vector<std::string>{});
            parsed.push_back(std::move(t));
        }
        taxonomy.branches[branch] = std::move(parsed);
    }
    taxonomy.validate();
    return taxonomy;
}

inline Taxonomy load_taxonomy_file(const fs::path& path) {
    auto doc = nlohmann::json::parse(read_file(path), nullptr, false);
    if (doc.is_discarded()) throw Error(ErrorCode::parse_error, "invalid JSON: " + path.string());
    return parse_taxonomy(doc);
}

inline const Taxonomy& default_taxonomy() {
    static const Taxonomy taxonomy =
        parse_taxonomy(nlohmann::json::parse(default_taxonomy_json()));
    return taxonomy;
}

struct BranchPair {
    std::string primary;
    std::string secondary;
};

/// Uniform primary, then uniform secondary among the remaining branches.
inline BranchPair sample_branches(const Taxonomy& taxonomy, Rng& rng) {
    auto names = taxonomy.branch_names();
    if (names.size() < 2) {
        throw Error(ErrorCode::empty_taxonomy,
                    "need at least two branches to pick a distinct secondary");
    }
    size_t primary = rng.uniform(names.size());
    size_t secondary = rng.uniform(names.size() - 1);
    if (secondary >= primary) ++secondary;
    return {names[primary], names[secondary]};
}

}  // namespace sandpipe
