#pragma once
// Difficulty rating (judge, averaged runs) and the empirical difficulty
// filter (a record survives only when the solver fails to reproduce its
// reference answer).

#include <cmath>
#include <string>
#include <vector>

#include "sandpipe/core/types.hpp"
#include "sandpipe/generation/prompts.hpp"
#include "sandpipe/generation/tags.hpp"
#include "sandpipe/providers/interfaces.hpp"
#include "sandpipe/util/rng.hpp"
#include "sandpipe/util/strings.hpp"

namespace sandpipe {

struct DifficultyResponse {
    std::string summary;
    double score = 0.0;
    std::string rationale;
};

/// Parses <S>, <D>, <R> spans; the score must lie in [1.0, 10.0] on a 0.5
/// grid.
inline DifficultyResponse parse_difficulty_response(std::string_view text) {
    auto summary = detail::first_tag_span(text, "S");
    if (!summary) throw Error(ErrorCode::missing_tag, "no <S> span");
    auto score_text = detail::first_tag_span(text, "D");
    if (!score_text) throw Error(ErrorCode::missing_tag, "no <D> span");
    auto rationale = detail::first_tag_span(text, "R");
    if (!rationale) throw Error(ErrorCode::missing_tag, "no <R> span");

    std::string trimmed = trim(*score_text);
    char* end = nullptr;
    double score = std::strtod(trimmed.c_str(), &end);
    if (trimmed.empty() || end != trimmed.c_str() + trimmed.size()) {
        throw Error(ErrorCode::invalid_score, "score is not a number: '" + trimmed + "'");
    }
    if (score < 1.0 || score > 10.0) {
        throw Error(ErrorCode::score_out_of_range, trimmed);
    }
    double doubled = score * 2.0;
    if (std::abs(doubled - std::round(doubled)) > 1e-9) {
        throw Error(ErrorCode::score_not_half_step, trimmed);
    }
    return {std::move(*summary), score, std::move(*rationale)};
}

struct RatingParams {
    std::string model;
    int runs = 3;
    std::uint64_t seed = 0;
};

/// `runs` independent judge calls. A run whose reply does not parse is
/// retried once and then excluded; fewer than ceil(runs/2) successful runs is
/// InsufficientRatings. mean_score is the arithmetic mean of the run scores.
inline DifficultyRating rate_difficulty(const ProblemRecord& record, ChatProvider& judge,
                                        const RatingParams& params) {
    const ReasoningTrace* canonical = record.canonical_trace();
    if (!canonical) {
        throw Error(ErrorCode::no_valid_trace, "rating needs a canonical trace: " + record.id);
    }
    ChatRequest request;
    request.model = params.model;
    request.user_prompt = build_rating_prompt(record.question, canonical->trace_text);
    request.temperature = 0.0;
    request.n_samples = 1;

    DifficultyRating rating;
    for (int run = 0; run < params.runs; ++run) {
        for (int attempt = 0; attempt < 2; ++attempt) {
            request.seed = derive_seed(params.seed, "rate:" + record.id + ":" +
                                                        std::to_string(run) + ":" +
                                                        std::to_string(attempt));
            std::string reply = judge.chat_complete(request).completions.at(0);
            try {
                DifficultyResponse parsed = parse_difficulty_response(reply);
                rating.run_scores.push_back(parsed.score);
                rating.summaries.push_back(std::move(parsed.summary));
                rating.rationales.push_back(std::move(parsed.rationale));
                break;
            } catch (const Error&) {
                // retried once, then this run is excluded
            }
        }
    }
    int needed = (params.runs + 1) / 2;
    if (static_cast<int>(rating.run_scores.size()) < needed) {
        throw Error(ErrorCode::insufficient_ratings,
                    std::to_string(rating.run_scores.size()) + " of " +
                        std::to_string(params.runs) + " runs parsed for " + record.id);
    }
    double sum = 0.0;
    for (double s : rating.run_scores) sum += s;
    rating.mean_score = sum / static_cast<double>(rating.run_scores.size());
    return rating;
}

struct SolverParams {
    std::string model;
    int attempts = 1;
    double temperature = 0.0;  // greedy
    std::uint64_t seed = 0;
};

struct DifficultyFilterOutcome {
    bool keep = true;  // kept means the solver failed every attempt
    std::vector<std::string> solver_answers;
};

/// The solver attempts the question; a record is retained only when no
/// attempt's normalized answer matches the reference. Extraction failures
/// count as wrong attempts.
inline DifficultyFilterOutcome difficulty_filter(const ProblemRecord& record, ChatProvider& solver,
                                                 const std::string& reference_answer,
                                                 const SolverParams& params) {
    ChatRequest request;
    request.model = params.model;
    request.user_prompt = build_solution_prompt(record.question);
    request.temperature = params.temperature;
    request.n_samples = 1;

    DifficultyFilterOutcome outcome;
    for (int attempt = 0; attempt < params.attempts; ++attempt) {
        request.seed = derive_seed(params.seed,
                                   "solve:" + record.id + ":" + std::to_string(attempt));
        std::string reply = solver.chat_complete(request).completions.at(0);
        std::string answer;
        try {
            answer = normalize_answer(extract_boxed_answer(reply));
        } catch (const Error&) {
            outcome.solver_answers.push_back("<no-answer>");
            continue;  // failed attempt
        }
        outcome.solver_answers.push_back(answer);
        if (answer == reference_answer) {
            outcome.keep = false;  // solver succeeded, problem too easy
        }
    }
    return outcome;
}

}  // namespace sandpipe
