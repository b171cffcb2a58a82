#pragma once
// Web-novelty filtering: the question is used verbatim as a search query,
// each hit's title+snippet is embedded, and the record survives only when
// the maximum cosine similarity stays at or below tau. No results means
// maximum similarity 0 and the record is kept.

#include <optional>
#include <string>
#include <vector>

#include "sandpipe/core/types.hpp"
#include "sandpipe/providers/interfaces.hpp"
#include "sandpipe/providers/vector_math.hpp"

namespace sandpipe {

struct NoveltyEvidence {
    std::string query;
    double max_similarity = 0.0;
    std::optional<std::string> best_url;
    int result_count = 0;
};

struct NoveltyOutcome {
    bool keep = true;
    NoveltyEvidence evidence;
};

struct NoveltyParams {
    double tau = 0.85;
    int k = 10;
};

/// Search and embedding failures propagate to the caller, which holds the
/// record as unresolved rather than silently keeping it.
inline NoveltyOutcome novelty_filter(const ProblemRecord& record, SearchProvider& search,
                                     EmbeddingProvider& embedder, const NoveltyParams& params) {
    NoveltyOutcome outcome;
    outcome.evidence.query = record.question;

    auto results = search.web_search(record.question, params.k);
    outcome.evidence.result_count = static_cast<int>(results.size());
    if (!results.empty()) {
        std::vector<std::string> texts;
        texts.reserve(results.size() + 1);
        texts.push_back(record.question);
        for (const auto& r : results) texts.push_back(r.text());
        auto vectors = embedder.embed(texts);
        for (size_t i = 0; i < results.size(); ++i) {
            double sim = cosine_similarity(vectors.front(), vectors[i + 1]);
            if (sim > outcome.evidence.max_similarity) {
                outcome.evidence.max_similarity = sim;
                outcome.evidence.best_url = results[i].url;
            }
        }
    }
    outcome.keep = outcome.evidence.max_similarity <= params.tau;
    return outcome;
}

}  // namespace sandpipe
