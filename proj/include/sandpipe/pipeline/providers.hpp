#pragma once
// Provider wiring: builds the teacher/judge/solver/embedder/search bundle
// from the config, either as HTTP clients or as the deterministic mocks.
// Also loads benchmark question sets (plain text, one question per line, or
// JSONL with a "question" field).

#include <memory>
#include <string>
#include <vector>

#include "sandpipe/core/types.hpp"
#include "sandpipe/pipeline/config.hpp"
#include "sandpipe/providers/http.hpp"
#include "sandpipe/providers/mock.hpp"

namespace sandpipe {

struct ProviderBundle {
    std::shared_ptr<ChatProvider> teacher;
    std::shared_ptr<ChatProvider> judge;
    std::shared_ptr<ChatProvider> solver;
    std::shared_ptr<EmbeddingProvider> embedder;
    std::shared_ptr<SearchProvider> search;
};

inline ProviderBundle build_providers(const PipelineConfig& config) {
    ProviderBundle bundle;
    if (config.mock) {
        // separate instances so per-role call counts stay meaningful; the
        // mock is a pure function of (seed, request), so behavior is shared
        bundle.teacher = std::make_shared<MockChatProvider>(config.seed);
        bundle.judge = std::make_shared<MockChatProvider>(config.seed);
        bundle.solver = std::make_shared<MockChatProvider>(config.seed);
        bundle.embedder = std::make_shared<MockEmbeddingProvider>(config.seed);
        bundle.search = std::make_shared<MockSearchProvider>(config.seed);
        return bundle;
    }
    auto make_chat = [&](Role role) -> std::shared_ptr<ChatProvider> {
        const RoleConfig& rc = config.role(role);
        if (rc.provider.endpoint_url.empty()) {
            throw Error(ErrorCode::validation_error,
                        "providers." + std::string(to_string(role)) +
                            ".endpoint_url required unless mock is enabled");
        }
        return std::make_shared<HttpChatProvider>(rc.provider, rc.model);
    };
    bundle.teacher = make_chat(Role::teacher);
    bundle.judge = make_chat(Role::judge);
    bundle.solver = make_chat(Role::solver);
    const RoleConfig& embed_rc = config.role(Role::embedder);
    if (embed_rc.provider.endpoint_url.empty()) {
        throw Error(ErrorCode::validation_error,
                    "providers.embedder.endpoint_url required unless mock is enabled");
    }
    bundle.embedder = std::make_shared<HttpEmbeddingProvider>(embed_rc.provider, embed_rc.model);
    const RoleConfig& search_rc = config.role(Role::search);
    if (search_rc.provider.endpoint_url.empty()) {
        throw Error(ErrorCode::validation_error,
                    "providers.search.endpoint_url required unless mock is enabled");
    }
    bundle.search = std::make_shared<SearxngSearchProvider>(search_rc.provider);
    return bundle;
}

inline std::vector<BenchmarkItem> load_benchmark_file(const std::string& name,
                                                      const fs::path& path) {
    std::vector<BenchmarkItem> items;
    bool jsonl = path.extension() == ".jsonl" || path.extension() == ".json";
    for (const auto& line : read_lines(path)) {
        std::string body = trim(line);
        if (body.empty()) continue;
        BenchmarkItem item;
        item.benchmark = name;
        if (jsonl) {
            auto doc = nlohmann::json::parse(body, nullptr, false);
            if (doc.is_discarded() || !doc.contains("question") || !doc["question"].is_string()) {
                throw Error(ErrorCode::parse_error,
                            "benchmark line needs a question field: " + path.string());
            }
            item.question = doc["question"].get<std::string>();
        } else {
            item.question = body;
        }
        if (item.question.empty()) continue;
        items.push_back(std::move(item));
    }
    return items;
}

// Small built-in set used by mock runs when no benchmark files are
// configured, so the decontamination stage still has an index to query.
inline std::vector<BenchmarkItem> builtin_mock_benchmarks() {
    return {
        {"mock-bench", "Find the remainder when 2 to the power 100 is divided by 125."},
        {"mock-bench", "How many ordered triples of positive integers sum to 30 with each part at most 12?"},
        {"mock-bench", "A circle of radius 5 is inscribed in a triangle with perimeter 36. Find the area."},
        {"mock-bench", "Count the subsets of {1,...,20} containing no two consecutive integers."},
        {"mock-bench", "Let f(x) = x^2 - 7x + 11. For how many integers n is f(n) prime?"},
        {"mock-bench", "Two fair dice are rolled until a sum of 7 appears. Find the expected number of rolls."},
    };
}

inline std::vector<BenchmarkItem> load_benchmarks(const PipelineConfig& config,
                                                  const fs::path& base_dir) {
    std::vector<BenchmarkItem> items;
    for (const auto& source : config.benchmarks) {
        fs::path path(source.path);
        if (path.is_relative()) path = base_dir / path;
        auto loaded = load_benchmark_file(source.name, path);
        items.insert(items.end(), loaded.begin(), loaded.end());
    }
    if (items.empty() && config.mock) items = builtin_mock_benchmarks();
    return items;
}

}  // namespace sandpipe
