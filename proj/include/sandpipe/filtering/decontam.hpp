#pragma once
// Benchmark decontamination: nearest-neighbor retrieval over the benchmark
// questions followed by an LLM judge. The judge sees exactly the retrieved
// neighbors, with no similarity pre-threshold.

#include <algorithm>
#include <string>
#include <vector>

#include "sandpipe/core/types.hpp"
#include "sandpipe/generation/prompts.hpp"
#include "sandpipe/providers/interfaces.hpp"
#include "sandpipe/providers/vector_math.hpp"
#include "sandpipe/util/strings.hpp"

namespace sandpipe {

struct BenchmarkIndex {
    std::vector<BenchmarkItem> items;
    std::vector<EmbeddingVector> embeddings;  // parallel to items
    size_t dim = 0;

    struct Neighbor {
        size_t index;
        double similarity;
    };

    // Top-m by cosine similarity, descending; ties break on insertion order.
    std::vector<Neighbor> top_neighbors(const EmbeddingVector& query, size_t m) const {
        std::vector<Neighbor> all;
        all.reserve(items.size());
        for (size_t i = 0; i < items.size(); ++i) {
            all.push_back({i, cosine_similarity(query, embeddings[i])});
        }
        std::stable_sort(all.begin(), all.end(), [](const Neighbor& a, const Neighbor& b) {
            return a.similarity > b.similarity;
        });
        if (all.size() > m) all.resize(m);
        return all;
    }
};

inline BenchmarkIndex build_benchmark_index(const std::vector<BenchmarkItem>& items,
                                            EmbeddingProvider& embedder) {
    if (items.empty()) {
        throw Error(ErrorCode::empty_input, "benchmark index needs at least one item");
    }
    BenchmarkIndex index;
    index.items = items;
    std::vector<std::string> texts;
    texts.reserve(items.size());
    for (const auto& item : items) {
        if (item.question.empty()) {
            throw Error(ErrorCode::validation_error, "benchmark item with empty question");
        }
        texts.push_back(item.question);
    }
    index.embeddings = embedder.embed(texts);
    index.dim = index.embeddings.front().dim;
    return index;
}

struct DecontamOutcome {
    bool keep = true;
    std::string matched_benchmark;  // set when removed
    std::string matched_question;
};

/// Retrieves the top neighbors, fills the judge prompt, and reads the first
/// alphabetic token of the reply: "yes" removes, "no" keeps. An unparseable
/// reply is retried once, then surfaces as UnresolvedJudgment.
inline DecontamOutcome decontaminate(const ProblemRecord& record, const BenchmarkIndex& index,
                                     EmbeddingProvider& embedder, ChatProvider& judge,
                                     const std::string& judge_model, size_t neighbors,
                                     std::uint64_t seed) {
    EmbeddingVector query = embedder.embed({record.question}).front();
    auto nearest = index.top_neighbors(query, neighbors);
    std::vector<std::string> neighbor_questions;
    neighbor_questions.reserve(nearest.size());
    for (const auto& n : nearest) neighbor_questions.push_back(index.items[n.index].question);

    ChatRequest request;
    request.model = judge_model;
    request.user_prompt = build_decontam_prompt(record.question, neighbor_questions);
    request.temperature = 0.0;
    request.n_samples = 1;
    for (int attempt = 0; attempt < 2; ++attempt) {
        request.seed = derive_seed(seed, "decontam:" + record.id + ":" + std::to_string(attempt));
        std::string reply = judge.chat_complete(request).completions.at(0);
        std::string token = first_alpha_token(reply);
        if (token == "no") return {true, "", ""};
        if (token == "yes") {
            DecontamOutcome outcome;
            outcome.keep = false;
            if (!nearest.empty()) {
                outcome.matched_benchmark = index.items[nearest.front().index].benchmark;
                outcome.matched_question = index.items[nearest.front().index].question;
            }
            return outcome;
        }
    }
    throw Error(ErrorCode::unresolved_judgment, "judge reply not yes/no for " + record.id);
}

}  // namespace sandpipe
