#pragma once
// Error taxonomy shared by every module. Each failure mode the library can
// surface carries a stable code so callers (and tests) can branch on it
// without string matching.

#include <stdexcept>
#include <string>
#include <string_view>

namespace sandpipe {

enum class ErrorCode {
    // answer extraction / normalization
    no_boxed_answer,
    unbalanced_braces,
    empty_question,
    // tagged-output parsing
    missing_q_tag,
    missing_s_tag,
    nested_tags,
    missing_tag,
    score_out_of_range,
    score_not_half_step,
    invalid_score,
    // taxonomy / hiking
    empty_taxonomy,
    unknown_branch,
    empty_theorem_pool,
    // filtering
    no_valid_trace,
    insufficient_ratings,
    unresolved_judgment,
    // vector math
    dimension_mismatch,
    zero_vector,
    // providers
    empty_input,
    timeout,
    rate_limited,
    malformed_response,
    auth_failure,
    http_error,
    // config / pipeline
    parse_error,
    validation_error,
    prior_stage_incomplete,
    config_drift,
    incomplete_run,
    run_locked,
    io_error,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::no_boxed_answer: return "NoBoxedAnswer";
        case ErrorCode::unbalanced_braces: return "UnbalancedBraces";
        case ErrorCode::empty_question: return "EmptyQuestion";
        case ErrorCode::missing_q_tag: return "MissingQTag";
        case ErrorCode::missing_s_tag: return "MissingSTag";
        case ErrorCode::nested_tags: return "NestedTags";
        case ErrorCode::missing_tag: return "MissingTag";
        case ErrorCode::score_out_of_range: return "ScoreOutOfRange";
        case ErrorCode::score_not_half_step: return "ScoreNotHalfStep";
        case ErrorCode::invalid_score: return "InvalidScore";
        case ErrorCode::empty_taxonomy: return "EmptyTaxonomy";
        case ErrorCode::unknown_branch: return "UnknownBranch";
        case ErrorCode::empty_theorem_pool: return "EmptyTheoremPool";
        case ErrorCode::no_valid_trace: return "NoValidTrace";
        case ErrorCode::insufficient_ratings: return "InsufficientRatings";
        case ErrorCode::unresolved_judgment: return "UnresolvedJudgment";
        case ErrorCode::dimension_mismatch: return "DimensionMismatch";
        case ErrorCode::zero_vector: return "ZeroVector";
        case ErrorCode::empty_input: return "EmptyInput";
        case ErrorCode::timeout: return "Timeout";
        case ErrorCode::rate_limited: return "RateLimited";
        case ErrorCode::malformed_response: return "MalformedResponse";
        case ErrorCode::auth_failure: return "AuthFailure";
        case ErrorCode::http_error: return "HttpError";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::validation_error: return "ValidationError";
        case ErrorCode::prior_stage_incomplete: return "PriorStageIncomplete";
        case ErrorCode::config_drift: return "ConfigDrift";
        case ErrorCode::incomplete_run: return "IncompleteRun";
        case ErrorCode::run_locked: return "RunLocked";
        case ErrorCode::io_error: return "IoError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sandpipe
