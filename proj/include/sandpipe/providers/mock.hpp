#pragma once
// Deterministic in-process providers. Every reply is a pure function of
// (constructor seed, request contents, request seed, sample index), so two
// pipeline runs with identical configuration produce byte-identical outputs
// regardless of thread scheduling.
//
// MockChatProvider implements a small self-consistent universe: it
// recognizes which prompt template it was handed and plays the matching
// role (teacher, judge, solver). A question's "true" answer is a hash of its
// text, so solution sampling, the solver probe, and difficulty behavior all
// agree with each other without any shared state.

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sandpipe/providers/interfaces.hpp"
#include "sandpipe/util/rng.hpp"
#include "sandpipe/util/strings.hpp"

namespace sandpipe {

namespace mockdetail {

constexpr std::uint64_t kSaltAnswer = 0xA11CE5ED00000001ULL;
constexpr std::uint64_t kSaltSkill = 0xA11CE5ED00000002ULL;
constexpr std::uint64_t kSaltRating = 0xA11CE5ED00000003ULL;
constexpr std::uint64_t kSaltDecontam = 0xA11CE5ED00000004ULL;
constexpr std::uint64_t kSaltSearch = 0xA11CE5ED00000005ULL;
constexpr std::uint64_t kSaltFamily = 0xA11CE5ED00000006ULL;
constexpr std::uint64_t kSaltEmbed = 0xA11CE5ED00000007ULL;

inline std::string slice_between(const std::string& text, std::string_view begin,
                                 std::string_view end) {
    size_t b = text.find(begin);
    if (b == std::string::npos) return {};
    b += begin.size();
    size_t e = end.empty() ? std::string::npos : text.find(end, b);
    return trim(text.substr(b, e == std::string::npos ? std::string::npos : e - b));
}

// Hash of the question text that every mock role treats as ground truth.
inline std::uint64_t question_key(std::uint64_t universe_seed, std::string_view question) {
    return mix_seed(universe_seed, fnv1a64(collapse_whitespace(question)));
}

inline int true_answer(std::uint64_t universe_seed, std::string_view question) {
    Rng rng(mix_seed(question_key(universe_seed, question), kSaltAnswer));
    return static_cast<int>(rng.uniform(1000));
}

}  // namespace mockdetail

// ---------------------------------------------------------------------------
// Embeddings: seeded feature hashing of character trigrams into a fixed
// 64-dim unit vector. Deterministic and similarity-monotone enough for
// threshold tests (near-identical texts land near cosine 1).
// ---------------------------------------------------------------------------
class MockEmbeddingProvider : public EmbeddingProvider {
public:
    static constexpr size_t kDim = 64;

    explicit MockEmbeddingProvider(std::uint64_t seed = 0)
        : salt_(mix_seed(seed, mockdetail::kSaltEmbed)) {}

    EmbeddingVector embed_one(const std::string& text) const {
        std::vector<double> v(kDim, 0.0);
        std::string canon = to_lower(collapse_whitespace(text));
        const size_t n = 3;
        if (canon.size() >= n) {
            for (size_t i = 0; i + n <= canon.size(); ++i) {
                std::uint64_t h = mix_seed(salt_, fnv1a64(std::string_view(canon).substr(i, n)));
                double sign = (h >> 63) ? 1.0 : -1.0;
                v[h % kDim] += sign;
            }
        } else {
            std::uint64_t h = mix_seed(salt_, fnv1a64(canon));
            v[h % kDim] += 1.0;
        }
        double norm = 0.0;
        for (double x : v) norm += x * x;
        if (norm == 0.0) {
            v[0] = 1.0;
        } else {
            norm = std::sqrt(norm);
            for (double& x : v) x /= norm;
        }
        return EmbeddingVector(std::move(v));
    }

protected:
    std::vector<EmbeddingVector> do_embed(const std::vector<std::string>& texts) override {
        std::vector<EmbeddingVector> out;
        out.reserve(texts.size());
        for (const auto& t : texts) out.push_back(embed_one(t));
        return out;
    }

private:
    std::uint64_t salt_;
};

// ---------------------------------------------------------------------------
// Search: hash-synthesized result lists. A slice of queries gets a result
// whose snippet echoes the query itself, which is what the novelty filter is
// there to catch.
// ---------------------------------------------------------------------------
class MockSearchProvider : public SearchProvider {
public:
    explicit MockSearchProvider(std::uint64_t seed = 0) : seed_(seed) {}

protected:
    std::vector<SearchResult> do_search(const std::string& query, int k) override {
        Rng rng(mix_seed(mockdetail::question_key(seed_, query), mockdetail::kSaltSearch));
        size_t hits = rng.uniform(4);  // 0..3 results
        static const char* kWords[] = {"sequences", "residues",  "invariants", "lattices",
                                       "colorings", "orbits",    "partitions", "estimates",
                                       "bounds",    "recursions"};
        std::vector<SearchResult> out;
        for (size_t j = 0; j < hits && static_cast<int>(out.size()) < k; ++j) {
            SearchResult r;
            std::uint64_t page = rng.next_u64() % 100000;
            r.url = "https://example.org/threads/" + std::to_string(page);
            bool echo = rng.uniform(100) < 12;
            if (echo) {
                r.title = "Problem discussion";
                r.snippet = collapse_whitespace(query);
            } else {
                r.title = std::string("Notes on ") + kWords[rng.uniform(10)];
                r.snippet = std::string("A survey of ") + kWords[rng.uniform(10)] +
                            " techniques with worked examples on " + kWords[rng.uniform(10)] +
                            " and related " + kWords[rng.uniform(10)] + ".";
            }
            out.push_back(std::move(r));
        }
        return out;
    }

private:
    std::uint64_t seed_;
};

// Search provider with a fixed corpus: exact query -> ranked results.
class ScriptedSearchProvider : public SearchProvider {
public:
    void script(std::string query, std::vector<SearchResult> results) {
        corpus_[std::move(query)] = std::move(results);
    }

protected:
    std::vector<SearchResult> do_search(const std::string& query, int k) override {
        auto it = corpus_.find(query);
        if (it == corpus_.end()) return {};
        auto results = it->second;
        if (static_cast<int>(results.size()) > k) results.resize(static_cast<size_t>(k));
        return results;
    }

private:
    std::map<std::string, std::vector<SearchResult>> corpus_;
};

// Chat provider that replays a scripted sequence of responses (or raises the
// scripted error). Used by tests that need one specific transcript.
class ScriptedChatProvider : public ChatProvider {
public:
    struct Step {
        std::vector<std::string> completions;
        std::optional<ErrorCode> error;
    };

    void enqueue(std::vector<std::string> completions) {
        std::lock_guard lock(mu_);
        steps_.push_back({std::move(completions), std::nullopt});
    }

    void enqueue_error(ErrorCode code) {
        std::lock_guard lock(mu_);
        steps_.push_back({{}, code});
    }

protected:
    ChatResponse do_chat(const ChatRequest& request) override {
        Step step;
        {
            std::lock_guard lock(mu_);
            if (steps_.empty()) {
                throw Error(ErrorCode::malformed_response, "scripted chat exhausted");
            }
            step = std::move(steps_.front());
            steps_.pop_front();
        }
        if (step.error) throw Error(*step.error, "scripted failure");
        ChatResponse response;
        response.completions = std::move(step.completions);
        response.completions.resize(static_cast<size_t>(request.n_samples));
        return response;
    }

private:
    std::mutex mu_;
    std::deque<Step> steps_;
};

// ---------------------------------------------------------------------------
// The teacher/judge/solver universe.
// ---------------------------------------------------------------------------
class MockChatProvider : public ChatProvider {
public:
    explicit MockChatProvider(std::uint64_t seed = 0) : seed_(seed) {}

protected:
    ChatResponse do_chat(const ChatRequest& request) override {
        ChatResponse response;
        std::uint64_t call_key =
            mix_seed(mix_seed(seed_, request.seed.value_or(0)), fnv1a64(request.user_prompt));
        for (int i = 0; i < request.n_samples; ++i) {
            response.completions.push_back(complete(request, call_key, i));
        }
        response.usage.prompt_tokens = static_cast<std::int64_t>(request.user_prompt.size() / 4);
        for (const auto& c : response.completions) {
            response.usage.completion_tokens += static_cast<std::int64_t>(c.size() / 4);
        }
        return response;
    }

private:
    std::string complete(const ChatRequest& request, std::uint64_t call_key, int sample) const {
        const std::string& prompt = request.user_prompt;
        if (prompt.find("Generate one novel math problem") != std::string::npos) {
            return generate_question(call_key, sample);
        }
        if (prompt.find("Answer the mathematics question.") != std::string::npos) {
            return answer_question(prompt, request.temperature, call_key, sample);
        }
        if (prompt.find("Expert Math Problem Difficulty Assessor") != std::string::npos) {
            return rate_problem(prompt, call_key, sample);
        }
        if (prompt.find("identical to or a paraphrased version") != std::string::npos) {
            return judge_contamination(prompt, call_key);
        }
        if (prompt.find("expert math problem crafter") != std::string::npos) {
            return rewrite_harder(prompt, call_key, sample);
        }
        // Unknown prompt shape: echo something harmless but deterministic.
        return "Acknowledged (" + std::to_string(call_key % 997) + ").";
    }

    std::string generate_question(std::uint64_t call_key, int sample) const {
        Rng rng(mix_seed(call_key, 0x51ULL + static_cast<std::uint64_t>(sample)));
        if (rng.uniform(100) < 4) {
            return "I explored several constructions but none produced a well-posed problem "
                   "with a clean integer answer, so I have no final statement this time.";
        }
        // A small family space creates deliberate duplicate and near-duplicate
        // questions so the dedup stage has real work to do.
        std::uint64_t family = rng.uniform(1300);
        std::uint64_t variant = rng.uniform(3);
        Rng fam(mix_seed(seed_, mockdetail::kSaltFamily + family * 2654435761ULL));
        std::uint64_t a = 2 + fam.uniform(97);
        std::uint64_t b = fam.uniform(50);
        std::uint64_t c = 3 + fam.uniform(17);
        std::uint64_t m = 7 + fam.uniform(993);
        std::uint64_t t = 50 + fam.uniform(900);
        std::string question =
            "Let n = " + std::to_string(a) + " and consider the sequence defined by s(0) = " +
            std::to_string(b) + " and s(k+1) = (" + std::to_string(c) +
            "*s(k) + k^2 + 3) mod " + std::to_string(m) +
            " for every integer k >= 0. The sequence is eventually periodic, and its cycle "
            "structure interacts with the residues of k^2 modulo " + std::to_string(m) +
            " in a way that admits a closed-form description once the preperiod is separated "
            "from the cycle and the cycle sum is reduced. ";
        switch (variant) {
            case 0: question += "Determine the value of s(" + std::to_string(t) + ")."; break;
            case 1: question += "Determine the value of s(" + std::to_string(t) + ")!"; break;
            default: question += "Compute the exact value of s(" + std::to_string(t) + ")."; break;
        }
        int answer = mockdetail::true_answer(seed_, question);
        std::string preamble =
            "Let me search for a construction mixing the requested areas before settling on a "
            "final statement.\n\n";
        return preamble + "<Q> " + question + " </Q>\n<S> Write the iteration as an affine map " +
               "on residues, split off the preperiod, and reduce the cycle contribution; the " +
               "count collapses to a single residue computation. The final answer is \\boxed{" +
               std::to_string(answer) + "}. </S>";
    }

    std::string answer_question(const std::string& prompt, double temperature,
                                std::uint64_t call_key, int sample) const {
        std::string question = mockdetail::slice_between(prompt, "question:\n", "");
        int base = mockdetail::true_answer(seed_, question);
        if (temperature == 0.0) {
            // Solver role: skill is a fixed property of the question, so the
            // difficulty probe is reproducible.
            Rng skill(mix_seed(mockdetail::question_key(seed_, question), mockdetail::kSaltSkill));
            bool solves = skill.uniform(100) < 40;
            int answer = solves ? base : base + 13;
            return "Working greedily through the recurrence and reducing modulo the base, the "
                   "orbit stabilizes quickly. The final answer is \\boxed{" +
                   std::to_string(answer) + "}.";
        }
        Rng rng(mix_seed(call_key, 0x50ULL + static_cast<std::uint64_t>(sample) * 7919ULL));
        if (rng.uniform(100) < 3) {
            return "The cycle analysis becomes inconsistent near the preperiod boundary and I "
                   "cannot commit to a final value.";
        }
        int answer = base;
        if (sample > 0 && rng.uniform(100) < 18) {
            answer = base + 1 + static_cast<int>(rng.uniform(5));
        }
        return "Sample the orbit of the affine map, separate preperiod from cycle, and sum the "
               "residues along one full cycle; after reduction the value is \\boxed{" +
               std::to_string(answer) + "}.";
    }

    std::string rate_problem(const std::string& prompt, std::uint64_t call_key, int sample) const {
        std::string question =
            mockdetail::slice_between(prompt, "## Math Problem:\n", "\n\n## Solution:");
        Rng base_rng(mix_seed(mockdetail::question_key(seed_, question), mockdetail::kSaltRating));
        std::uint64_t level = base_rng.uniform(19);  // 0..18 -> 1.0..10.0
        if (question.rfind("Olympiad extension:", 0) == 0) {
            level = std::min<std::uint64_t>(18, level + 4);
        }
        Rng run_rng(mix_seed(call_key, 0x52ULL + static_cast<std::uint64_t>(sample)));
        if (run_rng.uniform(100) < 2) {
            return "<S>The problem mixes periodicity with counting.</S>\n"
                   "I am unable to commit to a numeric difficulty for this one.";
        }
        long step = static_cast<long>(level) + static_cast<long>(run_rng.uniform(3)) - 1;
        step = std::clamp(step, 0L, 18L);
        std::string score = format_fixed(1.0 + 0.5 * static_cast<double>(step), 1);
        return "<S>The problem studies an affine recurrence modulo a fixed base and asks for a "
               "term far beyond the preperiod, combining periodicity arguments with careful "
               "residue bookkeeping.</S>\n<D>" + score + "</D>\n<R>The required insight matches "
               "the reference description for level " + score + ": the solver must separate the "
               "preperiod from the cycle and reduce a structured sum, which is routine but "
               "multi-step.</R>";
    }

    std::string judge_contamination(const std::string& prompt, std::uint64_t call_key) const {
        std::string question =
            mockdetail::slice_between(prompt, "New Question:\n", "\n\nExisting Questions:");
        Rng rng(mix_seed(mockdetail::question_key(seed_, question), mockdetail::kSaltDecontam));
        bool duplicate = rng.uniform(100) < 3;
        Rng style(mix_seed(call_key, 0x53ULL));
        switch (style.uniform(3)) {
            case 0: return duplicate ? "yes" : "no";
            case 1: return duplicate ? "Yes." : "No.";
            default: return duplicate ? "**yes**" : "**no**";
        }
    }

    std::string rewrite_harder(const std::string& prompt, std::uint64_t call_key, int sample) const {
        std::string original = mockdetail::slice_between(prompt, "Question: ", "\nSolution: ");
        Rng rng(mix_seed(call_key, 0x54ULL + static_cast<std::uint64_t>(sample)));
        if (rng.uniform(100) < 2) {
            return "The synthesis kept collapsing to the original problem, so I am not "
                   "returning a rewrite for this input.";
        }
        std::uint64_t nonce = rng.uniform(1000000);
        std::string question =
            "Olympiad extension: in the setting of the following construction, " + original +
            " Additionally, the parameters are constrained by a disguised classical result so "
            "that the admissible cases form a strictly smaller family, and the count must be "
            "carried out in its extremal case (configuration " + std::to_string(nonce) + ").";
        int answer = mockdetail::true_answer(seed_, question);
        return "<Q> " + question + " </Q>\n<S> Combining the hidden structural result with the "
               "supporting tool reduces the extremal case to a finite residue computation; "
               "carrying it out gives \\boxed{" + std::to_string(answer) + "}. </S>";
    }

    std::uint64_t seed_;
};

}  // namespace sandpipe
