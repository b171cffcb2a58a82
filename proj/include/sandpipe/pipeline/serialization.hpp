#pragma once
// JSONL persistence for records. nlohmann serializes object keys sorted and
// doubles shortest-round-trip, so identical records always produce identical
// bytes; every stage file is sorted by record id before writing.

#include <algorithm>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sandpipe/core/types.hpp"
#include "sandpipe/util/io.hpp"

namespace sandpipe {

using json = nlohmann::json;

inline Stage stage_from_string(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(Stage::hike); ++i) {
        auto stage = static_cast<Stage>(i);
        if (name == to_string(stage)) return stage;
    }
    throw Error(ErrorCode::parse_error, "unknown stage: " + name);
}

inline Verdict verdict_from_string(const std::string& name) {
    if (name == "passed") return Verdict::passed;
    if (name == "removed") return Verdict::removed;
    if (name == "transformed") return Verdict::transformed;
    throw Error(ErrorCode::parse_error, "unknown verdict: " + name);
}

inline json to_json(const ReasoningTrace& trace) {
    json doc;
    doc["trace_text"] = trace.trace_text;
    doc["raw_answer"] = trace.raw_answer ? json(*trace.raw_answer) : json(nullptr);
    doc["answer"] = trace.answer ? json(*trace.answer) : json(nullptr);
    doc["temperature"] = trace.temperature;
    doc["sample_index"] = trace.sample_index;
    return doc;
}

inline ReasoningTrace trace_from_json(const json& doc) {
    ReasoningTrace trace;
    trace.trace_text = doc.at("trace_text").get<std::string>();
    if (!doc.at("raw_answer").is_null()) trace.raw_answer = doc["raw_answer"].get<std::string>();
    if (!doc.at("answer").is_null()) trace.answer = doc["answer"].get<std::string>();
    trace.temperature = doc.at("temperature").get<double>();
    trace.sample_index = doc.at("sample_index").get<int>();
    return trace;
}

inline json to_json(const DifficultyRating& rating) {
    return {{"run_scores", rating.run_scores},
            {"mean_score", rating.mean_score},
            {"summaries", rating.summaries},
            {"rationales", rating.rationales}};
}

inline DifficultyRating rating_from_json(const json& doc) {
    DifficultyRating rating;
    rating.run_scores = doc.at("run_scores").get<std::vector<double>>();
    rating.mean_score = doc.at("mean_score").get<double>();
    rating.summaries = doc.at("summaries").get<std::vector<std::string>>();
    rating.rationales = doc.at("rationales").get<std::vector<std::string>>();
    return rating;
}

inline json to_json(const HikeInputs& inputs) {
    return {{"original_question", inputs.original_question},
            {"original_solution", inputs.original_solution},
            {"current_difficulty", inputs.current_difficulty},
            {"central_theorem", inputs.central_theorem},
            {"supporting_concept", inputs.supporting_concept},
            {"theorem_branch", inputs.theorem_branch},
            {"concept_branch", inputs.concept_branch},
            {"target_difficulty", inputs.target_difficulty}};
}

inline HikeInputs hike_inputs_from_json(const json& doc) {
    HikeInputs inputs;
    inputs.original_question = doc.at("original_question").get<std::string>();
    inputs.original_solution = doc.at("original_solution").get<std::string>();
    inputs.current_difficulty = doc.at("current_difficulty").get<double>();
    inputs.central_theorem = doc.at("central_theorem").get<std::string>();
    inputs.supporting_concept = doc.at("supporting_concept").get<std::string>();
    inputs.theorem_branch = doc.at("theorem_branch").get<std::string>();
    inputs.concept_branch = doc.at("concept_branch").get<std::string>();
    inputs.target_difficulty = doc.at("target_difficulty").get<double>();
    return inputs;
}

inline json to_json(const ProblemRecord& record) {
    json doc;
    doc["id"] = record.id;
    doc["question"] = record.question;
    doc["cogen_solution"] = record.cogen_solution;
    doc["primary_branch"] = record.primary_branch;
    doc["secondary_branch"] = record.secondary_branch;
    json traces = json::array();
    for (const auto& t : record.traces) traces.push_back(to_json(t));
    doc["traces"] = traces;
    doc["canonical_trace_index"] =
        record.canonical_trace_index ? json(*record.canonical_trace_index) : json(nullptr);
    doc["rating"] = record.rating ? to_json(*record.rating) : json(nullptr);
    json history = json::array();
    for (const auto& tag : record.stage_history) {
        history.push_back({{"stage", std::string(to_string(tag.stage))},
                           {"verdict", std::string(to_string(tag.verdict))},
                           {"detail", tag.detail}});
    }
    doc["stage_history"] = history;
    doc["origin"] = std::string(to_string(record.origin));
    doc["hike_meta"] = record.hike_meta ? to_json(*record.hike_meta) : json(nullptr);
    doc["lineage"] = record.lineage ? json(*record.lineage) : json(nullptr);
    return doc;
}

inline ProblemRecord record_from_json(const json& doc) {
    ProblemRecord record;
    record.id = doc.at("id").get<std::string>();
    record.question = doc.at("question").get<std::string>();
    record.cogen_solution = doc.at("cogen_solution").get<std::string>();
    record.primary_branch = doc.at("primary_branch").get<std::string>();
    record.secondary_branch = doc.at("secondary_branch").get<std::string>();
    for (const auto& t : doc.at("traces")) record.traces.push_back(trace_from_json(t));
    if (!doc.at("canonical_trace_index").is_null()) {
        record.canonical_trace_index = doc["canonical_trace_index"].get<size_t>();
    }
    if (!doc.at("rating").is_null()) record.rating = rating_from_json(doc["rating"]);
    for (const auto& tag : doc.at("stage_history")) {
        record.stage_history.push_back(
            {stage_from_string(tag.at("stage").get<std::string>()),
             verdict_from_string(tag.at("verdict").get<std::string>()),
             tag.at("detail").get<std::string>()});
    }
    record.origin =
        doc.at("origin").get<std::string>() == "hiked" ? Origin::hiked : Origin::generated;
    if (!doc.at("hike_meta").is_null()) record.hike_meta = hike_inputs_from_json(doc["hike_meta"]);
    if (!doc.at("lineage").is_null()) record.lineage = doc["lineage"].get<std::string>();
    return record;
}

inline std::string records_to_jsonl(std::vector<ProblemRecord> records) {
    std::sort(records.begin(), records.end(),
              [](const ProblemRecord& a, const ProblemRecord& b) { return a.id < b.id; });
    std::string out;
    for (const auto& r : records) {
        out += to_json(r).dump();
        out += "\n";
    }
    return out;
}

inline void write_records(const fs::path& path, const std::vector<ProblemRecord>& records) {
    atomic_write_file(path, records_to_jsonl(records));
}

inline std::vector<ProblemRecord> read_records(const fs::path& path) {
    std::vector<ProblemRecord> records;
    for (const auto& line : read_lines(path)) {
        if (trim(line).empty()) continue;
        auto doc = json::parse(line, nullptr, false);
        if (doc.is_discarded()) {
            throw Error(ErrorCode::parse_error, "bad JSONL line in " + path.string());
        }
        records.push_back(record_from_json(doc));
    }
    return records;
}

}  // namespace sandpipe
