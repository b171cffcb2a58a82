#pragma once
// Question and solution generation. Malformed teacher output is skipped and
// counted, never repaired: data integrity beats yield.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "sandpipe/core/ids.hpp"
#include "sandpipe/core/types.hpp"
#include "sandpipe/generation/prompts.hpp"
#include "sandpipe/generation/tags.hpp"
#include "sandpipe/generation/taxonomy.hpp"
#include "sandpipe/providers/interfaces.hpp"
#include "sandpipe/util/parallel.hpp"

namespace sandpipe {

struct GenerationParams {
    std::string model;
    double temperature = 0.8;
    std::optional<int> max_tokens;
    std::uint64_t seed = 0;
    size_t workers = 1;
};

struct QuestionBatch {
    std::vector<ProblemRecord> records;  // sorted by id
    size_t skipped = 0;
    std::vector<std::string> skip_details;
    size_t provider_failures = 0;
    std::optional<Error> first_provider_error;
};

namespace detail {

// Generated questions must carry a single non-negative integer answer; the
// co-generated solution is the cheapest place to check that contract.
inline bool has_nonnegative_integer_answer(const std::string& solution) {
    try {
        std::string answer = normalize_answer(extract_boxed_answer(solution));
        if (answer.empty()) return false;
        for (char c : answer) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        return true;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace detail

/// Issues n teacher calls and parses each reply into a ProblemRecord.
/// Unparseable or contract-violating replies become counted skips.
inline QuestionBatch generate_questions(size_t n, const Taxonomy& taxonomy, ChatProvider& chat,
                                        const GenerationParams& params, Rng& rng) {
    struct Call {
        BranchPair branches;
        std::uint64_t seed;
        size_t index;
    };
    std::vector<Call> calls;
    calls.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        calls.push_back({sample_branches(taxonomy, rng),
                         derive_seed(params.seed, "questions:" + std::to_string(i)), i});
    }

    struct Outcome {
        std::optional<ProblemRecord> record;
        std::string skip_detail;
        std::optional<Error> provider_error;
    };
    auto outcomes = parallel_map(calls, params.workers, [&](const Call& call, size_t) -> Outcome {
        Outcome outcome;
        ChatRequest request;
        request.model = params.model;
        request.user_prompt = build_question_prompt(call.branches.primary, call.branches.secondary);
        request.temperature = params.temperature;
        request.n_samples = 1;
        request.max_tokens = params.max_tokens;
        request.seed = call.seed;
        std::string reply;
        try {
            reply = chat.chat_complete(request).completions.at(0);
        } catch (const Error& e) {
            outcome.skip_detail = "provider: " + std::string(e.what());
            outcome.provider_error = e;
            return outcome;
        }
        QuestionSolution qs;
        try {
            qs = parse_qs_tags(reply);
        } catch (const Error& e) {
            outcome.skip_detail = "parse: " + std::string(e.what());
            return outcome;
        }
        if (qs.question.empty()) {
            outcome.skip_detail = "parse: empty question";
            return outcome;
        }
        if (!detail::has_nonnegative_integer_answer(qs.solution)) {
            outcome.skip_detail = "contract: co-generated answer is not a non-negative integer";
            return outcome;
        }
        ProblemRecord record;
        record.question = qs.question;
        record.id = record_id(record.question);
        record.cogen_solution = qs.solution;
        record.primary_branch = call.branches.primary;
        record.secondary_branch = call.branches.secondary;
        record.origin = Origin::generated;
        record.stage_history.push_back({Stage::questions, Verdict::passed,
                                        call.branches.primary + " / " + call.branches.secondary});
        outcome.record = std::move(record);
        return outcome;
    });

    QuestionBatch batch;
    std::set<std::string> seen_ids;
    for (auto& outcome : outcomes) {
        if (!outcome.record) {
            ++batch.skipped;
            batch.skip_details.push_back(outcome.skip_detail);
            if (outcome.provider_error) {
                ++batch.provider_failures;
                if (!batch.first_provider_error) {
                    batch.first_provider_error = outcome.provider_error;
                }
            }
            continue;
        }
        if (!seen_ids.insert(outcome.record->id).second) {
            ++batch.skipped;
            batch.skip_details.push_back("duplicate question id " + outcome.record->id);
            continue;
        }
        batch.records.push_back(std::move(*outcome.record));
    }
    std::sort(batch.records.begin(), batch.records.end(),
              [](const ProblemRecord& a, const ProblemRecord& b) { return a.id < b.id; });
    return batch;
}

struct SolutionParams {
    std::string model;
    int k = 2;
    double temperature = 0.6;
    std::optional<int> max_tokens;
    std::uint64_t seed = 0;
};

/// One chat call with n_samples = k; every completion becomes a trace with
/// its extracted, normalized answer (or an invalid-extraction flag).
inline ProblemRecord generate_solutions(const ProblemRecord& record, ChatProvider& chat,
                                        const SolutionParams& params) {
    ChatRequest request;
    request.model = params.model;
    request.user_prompt = build_solution_prompt(record.question);
    request.temperature = params.temperature;
    request.n_samples = params.k;
    request.max_tokens = params.max_tokens;
    request.seed = derive_seed(params.seed, "solutions:" + record.id);
    ChatResponse response = chat.chat_complete(request);

    ProblemRecord out = record;
    out.traces.clear();
    out.canonical_trace_index.reset();
    for (int i = 0; i < params.k; ++i) {
        out.traces.push_back(make_trace(response.completions.at(static_cast<size_t>(i)),
                                        params.temperature, i));
    }
    out.stage_history.push_back(
        {Stage::solutions, Verdict::transformed, std::to_string(params.k) + " traces"});
    return out;
}

}  // namespace sandpipe
