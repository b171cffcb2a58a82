#pragma once
// Internal near-duplicate removal. Greedy keep-first sweep in ascending id
// order: a record is dropped when its cosine similarity to any already-kept
// record exceeds the threshold, so the survivor of a duplicate cluster is
// always the lexicographically smallest id. After the sweep no retained pair
// exceeds the threshold.
//
// The sweep is exact all-pairs by default. Above ~50k records an optional
// hyperplane-bucketing accelerator narrows the candidate set; it must agree
// with the exact sweep on any fixture it is tested on.

#include <string>
#include <unordered_map>
#include <vector>

#include "sandpipe/core/types.hpp"
#include "sandpipe/providers/interfaces.hpp"
#include "sandpipe/providers/vector_math.hpp"
#include "sandpipe/util/rng.hpp"

namespace sandpipe {

struct DedupDecision {
    std::string kept_id;
    std::string removed_id;
    double similarity = 0.0;
};

struct DedupResult {
    std::vector<ProblemRecord> retained;
    std::vector<ProblemRecord> removed;
    std::vector<DedupDecision> decisions;
};

struct DedupOptions {
    double threshold = 0.99;
    bool use_bucketing = false;     // candidate pruning via hyperplane signatures
    size_t bucketing_cutoff = 50000;  // auto-enable above this many records
    size_t embed_batch = 64;
};

namespace detail {

// 32 signed projections against seeded pseudo-random hyperplanes, grouped
// into 16 two-bit bands. Vectors with high cosine similarity share a band
// with overwhelming probability.
inline std::vector<std::uint32_t> bucket_signature_bands(const EmbeddingVector& v) {
    std::vector<std::uint32_t> bands(16, 0);
    for (size_t plane = 0; plane < 32; ++plane) {
        Rng rng(mix_seed(0x5EEDB0CCULL, plane));
        double dot = 0.0;
        for (size_t d = 0; d < v.dim; ++d) {
            dot += v.values[d] * (rng.uniform_real() * 2.0 - 1.0);
        }
        if (dot >= 0) bands[plane / 2] |= 1u << (plane % 2);
    }
    // fold the band index into the key so band 3 of plane-pair 0 differs from
    // band 3 of plane-pair 1
    for (size_t b = 0; b < bands.size(); ++b) bands[b] |= static_cast<std::uint32_t>(b) << 8;
    return bands;
}

}  // namespace detail

inline std::vector<EmbeddingVector> embed_in_batches(EmbeddingProvider& embedder,
                                                     const std::vector<std::string>& texts,
                                                     size_t batch) {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (size_t begin = 0; begin < texts.size(); begin += batch) {
        size_t end = std::min(texts.size(), begin + batch);
        std::vector<std::string> chunk(texts.begin() + static_cast<long>(begin),
                                       texts.begin() + static_cast<long>(end));
        auto vectors = embedder.embed(chunk);
        out.insert(out.end(), vectors.begin(), vectors.end());
    }
    return out;
}

/// Greedy sweep over `records` (plus optional pre-kept `preseed` records that
/// can knock out candidates but are never removed or returned themselves).
/// Provider failures propagate and abort the stage.
inline DedupResult dedup(std::vector<ProblemRecord> records, EmbeddingProvider& embedder,
                         const DedupOptions& options = {},
                         const std::vector<ProblemRecord>* preseed = nullptr) {
    std::sort(records.begin(), records.end(),
              [](const ProblemRecord& a, const ProblemRecord& b) { return a.id < b.id; });

    std::vector<std::string> texts;
    for (const auto* set : {preseed, const_cast<const std::vector<ProblemRecord>*>(&records)}) {
        if (!set) continue;
        for (const auto& r : *set) texts.push_back(r.question);
    }
    std::vector<EmbeddingVector> embeddings;
    if (!texts.empty()) embeddings = embed_in_batches(embedder, texts, options.embed_batch);
    size_t preseed_count = preseed ? preseed->size() : 0;

    bool bucketing = options.use_bucketing || records.size() > options.bucketing_cutoff;
    std::unordered_map<std::uint32_t, std::vector<size_t>> buckets;  // band -> kept indices
    std::vector<size_t> kept_indices;  // indices into `embeddings`

    auto keep = [&](size_t index) {
        kept_indices.push_back(index);
        if (bucketing) {
            for (auto band : detail::bucket_signature_bands(embeddings[index])) {
                buckets[band].push_back(index);
            }
        }
    };
    for (size_t i = 0; i < preseed_count; ++i) keep(i);

    auto kept_id = [&](size_t index) -> const std::string& {
        return index < preseed_count ? (*preseed)[index].id
                                     : records[index - preseed_count].id;
    };

    DedupResult result;
    for (size_t r = 0; r < records.size(); ++r) {
        size_t index = preseed_count + r;
        std::optional<DedupDecision> hit;
        if (bucketing) {
            std::vector<size_t> candidates;
            for (auto band : detail::bucket_signature_bands(embeddings[index])) {
                auto it = buckets.find(band);
                if (it == buckets.end()) continue;
                candidates.insert(candidates.end(), it->second.begin(), it->second.end());
            }
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
            for (size_t c : candidates) {
                double sim = cosine_similarity(embeddings[index], embeddings[c]);
                if (sim > options.threshold) {
                    hit = DedupDecision{kept_id(c), records[r].id, sim};
                    break;
                }
            }
        } else {
            for (size_t c : kept_indices) {
                double sim = cosine_similarity(embeddings[index], embeddings[c]);
                if (sim > options.threshold) {
                    hit = DedupDecision{kept_id(c), records[r].id, sim};
                    break;
                }
            }
        }
        ProblemRecord out = records[r];
        if (hit) {
            out.stage_history.push_back({Stage::dedup, Verdict::removed,
                                         "near-duplicate of " + hit->kept_id});
            result.removed.push_back(std::move(out));
            result.decisions.push_back(std::move(*hit));
        } else {
            keep(index);
            out.stage_history.push_back({Stage::dedup, Verdict::passed, ""});
            result.retained.push_back(std::move(out));
        }
    }
    return result;
}

}  // namespace sandpipe
