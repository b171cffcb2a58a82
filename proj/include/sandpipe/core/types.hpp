#pragma once
// Domain types shared by every pipeline stage. All of these are immutable
// value objects once a stage has produced them; they are safe to copy across
// worker threads.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sandpipe/core/answers.hpp"

namespace sandpipe {

enum class Stage {
    questions,
    solutions,
    consistency,
    dedup,
    decontam,
    difficulty_rate,
    difficulty_filter,
    novelty,
    hike,
};

inline std::string_view to_string(Stage stage) {
    switch (stage) {
        case Stage::questions: return "questions";
        case Stage::solutions: return "solutions";
        case Stage::consistency: return "consistency";
        case Stage::dedup: return "dedup";
        case Stage::decontam: return "decontam";
        case Stage::difficulty_rate: return "difficulty_rate";
        case Stage::difficulty_filter: return "difficulty_filter";
        case Stage::novelty: return "novelty";
        case Stage::hike: return "hike";
    }
    return "?";
}

enum class Verdict { passed, removed, transformed };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::passed: return "passed";
        case Verdict::removed: return "removed";
        case Verdict::transformed: return "transformed";
    }
    return "?";
}

enum class Origin { generated, hiked };

inline std::string_view to_string(Origin o) {
    return o == Origin::generated ? "generated" : "hiked";
}

struct StageTag {
    Stage stage = Stage::questions;
    Verdict verdict = Verdict::passed;
    std::string detail;
};

// One sampled solution attempt. `answer` is the normalized final answer and
// is absent when no boxed answer could be extracted; such traces are invalid
// and poison self-consistency rather than comparing equal to anything.
struct ReasoningTrace {
    std::string trace_text;
    std::optional<std::string> raw_answer;
    std::optional<std::string> answer;
    double temperature = 0.0;
    int sample_index = 0;

    bool valid() const { return answer.has_value(); }
};

inline ReasoningTrace make_trace(std::string trace_text, double temperature, int sample_index) {
    ReasoningTrace trace;
    trace.trace_text = std::move(trace_text);
    trace.temperature = temperature;
    trace.sample_index = sample_index;
    try {
        std::string raw = extract_boxed_answer(trace.trace_text);
        trace.answer = normalize_answer(raw);
        trace.raw_answer = std::move(raw);
    } catch (const Error&) {
        // flagged invalid by leaving raw_answer/answer unset
    }
    return trace;
}

struct DifficultyRating {
    std::vector<double> run_scores;  // each in [1,10], multiples of 0.5
    double mean_score = 0.0;
    std::vector<std::string> summaries;
    std::vector<std::string> rationales;
};

// The four hiking inputs plus where they were sampled from. Kept on hiked
// records so every rewrite is auditable.
struct HikeInputs {
    std::string original_question;
    std::string original_solution;
    double current_difficulty = 0.0;
    std::string central_theorem;
    std::string supporting_concept;
    std::string theorem_branch;   // always the source record's primary branch
    std::string concept_branch;   // any branch, possibly the same
    double target_difficulty = 8.0;
};

struct ProblemRecord {
    std::string id;  // content digest of the question, see record_id()
    std::string question;
    std::string cogen_solution;  // solution co-generated with the question
    std::string primary_branch;
    std::string secondary_branch;
    std::vector<ReasoningTrace> traces;
    std::optional<size_t> canonical_trace_index;
    std::optional<DifficultyRating> rating;
    std::vector<StageTag> stage_history;
    Origin origin = Origin::generated;
    std::optional<HikeInputs> hike_meta;
    std::optional<std::string> lineage;  // source record id for hiked records

    const ReasoningTrace* canonical_trace() const {
        if (!canonical_trace_index || *canonical_trace_index >= traces.size()) return nullptr;
        return &traces[*canonical_trace_index];
    }
};

struct BenchmarkItem {
    std::string benchmark;
    std::string question;
};

// Stage ordinal used to check that histories are append-only and in pipeline
// order. Hiked records restart their history at the hike tag.
inline int stage_order(Stage s) { return static_cast<int>(s); }

inline bool validate_stage_history(const std::vector<StageTag>& history) {
    if (history.empty()) return true;
    size_t begin = 0;
    if (history[0].stage == Stage::hike) begin = 1;
    for (size_t i = begin; i < history.size(); ++i) {
        if (i > begin && stage_order(history[i].stage) <= stage_order(history[i - 1].stage)) {
            return false;
        }
        // a removal terminates the record's progression
        if (history[i].verdict == Verdict::removed && i + 1 != history.size()) return false;
    }
    return true;
}

}  // namespace sandpipe
