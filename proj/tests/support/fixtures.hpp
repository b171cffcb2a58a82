#pragma once
// Deterministic fixtures and independent oracles shared by the unit tests
// and the acceptance suite. The oracles are written against the stated
// algorithms directly (own cosine, own sweeps) so they stay independent of
// the library implementation they check.

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "sandpipe/core/types.hpp"
#include "sandpipe/providers/mock.hpp"
#include "sandpipe/util/rng.hpp"

namespace fixtures {

using sandpipe::EmbeddingVector;
using sandpipe::ProblemRecord;
using sandpipe::Rng;
using sandpipe::SearchResult;

inline std::string random_sentence(Rng& rng, size_t words) {
    static const char* kWords[] = {
        "triangle", "integer",  "prime",   "lattice", "sequence", "modulo",  "subset",
        "circle",   "function", "maximal", "ordered", "pairwise", "distinct", "count",
        "minimal",  "residue",  "vertex",  "segment", "product",  "divisor"};
    std::string out;
    for (size_t i = 0; i < words; ++i) {
        if (i) out += " ";
        out += kWords[rng.uniform(20)];
    }
    out += ".";
    return out;
}

// n records with deliberate duplicate structure: exact copies (distinct ids,
// identical text), near copies (single-character edits), loose copies (word
// substitutions), and unrelated texts.
inline std::vector<ProblemRecord> dedup_fixture(size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::string> bases;
    std::vector<ProblemRecord> records;
    for (size_t i = 0; i < n; ++i) {
        std::string question;
        std::uint64_t kind = rng.uniform(10);
        if (bases.empty() || kind >= 5) {
            question = "Problem: " + random_sentence(rng, 24 + rng.uniform(8)) + " Determine the count.";
            bases.push_back(question);
        } else {
            const std::string& base = bases[rng.uniform(bases.size())];
            if (kind < 2) {
                question = base;  // exact duplicate
            } else if (kind < 4) {
                question = base;  // near duplicate: flip final punctuation
                question.back() = question.back() == '.' ? '!' : '.';
            } else {
                question = base + " Provide " + random_sentence(rng, 3);  // looser copy
            }
        }
        ProblemRecord record;
        char id[16];
        std::snprintf(id, sizeof(id), "rec-%05zu", i);
        record.id = id;
        record.question = std::move(question);
        records.push_back(std::move(record));
    }
    return records;
}

// Independent cosine for the oracles.
inline double oracle_cosine(const EmbeddingVector& a, const EmbeddingVector& b) {
    double dot = 0, na = 0, nb = 0;
    for (size_t i = 0; i < a.values.size(); ++i) {
        dot += a.values[i] * b.values[i];
        na += a.values[i] * a.values[i];
        nb += b.values[i] * b.values[i];
    }
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

// All-pairs brute-force dedup with the keep-first-by-id rule, written from
// scratch against a precomputed similarity matrix.
inline std::vector<std::string> oracle_dedup_retained_ids(
    const std::vector<ProblemRecord>& records, sandpipe::MockEmbeddingProvider& embedder,
    double threshold) {
    std::vector<const ProblemRecord*> sorted;
    for (const auto& r : records) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(),
              [](const ProblemRecord* a, const ProblemRecord* b) { return a->id < b->id; });
    std::vector<EmbeddingVector> vectors;
    for (const auto* r : sorted) vectors.push_back(embedder.embed_one(r->question));
    std::vector<std::vector<double>> sim(sorted.size(), std::vector<double>(sorted.size(), 0.0));
    for (size_t i = 0; i < sorted.size(); ++i) {
        for (size_t j = 0; j < sorted.size(); ++j) {
            if (i != j) sim[i][j] = oracle_cosine(vectors[i], vectors[j]);
        }
    }
    std::vector<size_t> kept;
    std::vector<std::string> retained;
    for (size_t i = 0; i < sorted.size(); ++i) {
        bool removed = false;
        for (size_t k : kept) {
            if (sim[i][k] > threshold) {
                removed = true;
                break;
            }
        }
        if (!removed) {
            kept.push_back(i);
            retained.push_back(sorted[i]->id);
        }
    }
    return retained;
}

// Scripted search corpus for the novelty oracle: per question a deterministic
// result list whose snippets range from verbatim echoes to unrelated noise,
// so max similarities cross every tau under test.
struct NoveltyFixture {
    std::vector<ProblemRecord> records;
    std::map<std::string, std::vector<SearchResult>> corpus;
};

inline NoveltyFixture novelty_fixture(size_t n, std::uint64_t seed) {
    Rng rng(seed);
    NoveltyFixture fixture;
    for (size_t i = 0; i < n; ++i) {
        ProblemRecord record;
        char id[16];
        std::snprintf(id, sizeof(id), "nov-%05zu", i);
        record.id = id;
        record.question =
            "Problem " + std::to_string(i) + ": " + random_sentence(rng, 18 + rng.uniform(10));
        std::vector<SearchResult> results;
        size_t hits = rng.uniform(6);  // 0..5
        for (size_t j = 0; j < hits; ++j) {
            SearchResult r;
            r.url = "https://fixture.example/" + std::to_string(i) + "/" + std::to_string(j);
            switch (rng.uniform(4)) {
                case 0:  // verbatim echo -> similarity ~1
                    r.title = "copy";
                    r.snippet = record.question;
                    break;
                case 1: {  // partial echo -> mid similarity
                    r.title = "partial";
                    r.snippet = record.question.substr(0, record.question.size() / 2) + " " +
                                random_sentence(rng, 6);
                    break;
                }
                default:  // unrelated
                    r.title = "misc";
                    r.snippet = random_sentence(rng, 12 + rng.uniform(8));
            }
            results.push_back(std::move(r));
        }
        fixture.corpus[record.question] = std::move(results);
        fixture.records.push_back(std::move(record));
    }
    return fixture;
}

// Line-by-line reimplementation of the novelty screening loop: fetch top K,
// track the max snippet similarity starting from 0, retain iff max <= tau.
inline bool oracle_novelty_keep(const ProblemRecord& record,
                                const std::map<std::string, std::vector<SearchResult>>& corpus,
                                sandpipe::MockEmbeddingProvider& embedder, double tau, int k) {
    std::vector<SearchResult> results;
    auto it = corpus.find(record.question);
    if (it != corpus.end()) {
        results = it->second;
        if (static_cast<int>(results.size()) > k) results.resize(static_cast<size_t>(k));
    }
    double max_similarity = 0.0;
    EmbeddingVector q_emb = embedder.embed_one(record.question);
    for (const auto& result : results) {
        std::string text = result.title.empty()
                               ? result.snippet
                               : (result.snippet.empty() ? result.title
                                                         : result.title + " " + result.snippet);
        double similarity = oracle_cosine(q_emb, embedder.embed_one(text));
        if (similarity > max_similarity) max_similarity = similarity;
    }
    return max_similarity <= tau;
}

}  // namespace fixtures
