#pragma once
// Final dataset export. The dataset shape carries one line per record with
// the canonical solution and metadata; the instruct shape is the two-field
// instruction-tuning view. Exports are readable back for round-trip checks.

#include <string>
#include <vector>

#include "sandpipe/pipeline/manifest.hpp"
#include "sandpipe/pipeline/serialization.hpp"

namespace sandpipe {

enum class ExportFormat { dataset, instruct };

inline ExportFormat export_format_from_string(const std::string& name) {
    if (name == "dataset") return ExportFormat::dataset;
    if (name == "instruct") return ExportFormat::instruct;
    throw Error(ErrorCode::validation_error, "unknown export format: " + name);
}

struct ExportedRecord {
    std::string id;
    std::string question;
    std::string solution;
    std::string answer;
    std::string primary_branch;
    std::string secondary_branch;
    double difficulty_mean = 0.0;
    std::string origin;
    std::optional<std::string> lineage;
};

inline ExportedRecord to_exported(const ProblemRecord& record) {
    ExportedRecord out;
    out.id = record.id;
    out.question = record.question;
    const ReasoningTrace* canonical = record.canonical_trace();
    if (canonical) {
        out.solution = canonical->trace_text;
        if (canonical->answer) out.answer = *canonical->answer;
    }
    out.primary_branch = record.primary_branch;
    out.secondary_branch = record.secondary_branch;
    if (record.rating) out.difficulty_mean = record.rating->mean_score;
    out.origin = std::string(to_string(record.origin));
    out.lineage = record.lineage;
    return out;
}

inline std::string export_lines(std::vector<ProblemRecord> records, ExportFormat format) {
    std::sort(records.begin(), records.end(),
              [](const ProblemRecord& a, const ProblemRecord& b) { return a.id < b.id; });
    std::string out;
    for (const auto& record : records) {
        json doc;
        if (format == ExportFormat::dataset) {
            ExportedRecord e = to_exported(record);
            doc["id"] = e.id;
            doc["question"] = e.question;
            doc["solution"] = e.solution;
            doc["answer"] = e.answer;
            doc["primary_branch"] = e.primary_branch;
            doc["secondary_branch"] = e.secondary_branch;
            doc["difficulty_mean"] = e.difficulty_mean;
            doc["origin"] = e.origin;
            doc["lineage"] = e.lineage ? json(*e.lineage) : json(nullptr);
        } else {
            const ReasoningTrace* canonical = record.canonical_trace();
            doc["instruction"] = record.question;
            doc["output"] = canonical ? canonical->trace_text : record.cogen_solution;
        }
        out += doc.dump();
        out += "\n";
    }
    return out;
}

/// Emits the final dataset of a completed run. Requires the novelty stage
/// (and, when planned, the whole hike chain) to be complete.
inline fs::path export_dataset(const fs::path& run_dir, ExportFormat format,
                               std::optional<fs::path> out_path = std::nullopt) {
    RunManifest manifest = read_manifest(run_dir);
    const StageEntry* novelty = manifest.find("novelty");
    if (!novelty || novelty->status != StageStatus::complete) {
        throw Error(ErrorCode::incomplete_run, "novelty stage is not complete");
    }
    std::vector<ProblemRecord> records = read_records(run_dir / novelty->output_file);
    if (const StageEntry* hike_novelty = manifest.find("hike_novelty")) {
        if (hike_novelty->status != StageStatus::complete) {
            throw Error(ErrorCode::incomplete_run, "hike chain is not complete");
        }
        auto hiked = read_records(run_dir / hike_novelty->output_file);
        records.insert(records.end(), hiked.begin(), hiked.end());
    }
    fs::path path = out_path.value_or(
        run_dir / (format == ExportFormat::dataset ? "export_dataset.jsonl"
                                                   : "export_instruct.jsonl"));
    atomic_write_file(path, export_lines(std::move(records), format));
    return path;
}

inline std::vector<ExportedRecord> read_dataset_export(const fs::path& path) {
    std::vector<ExportedRecord> records;
    for (const auto& line : read_lines(path)) {
        if (trim(line).empty()) continue;
        auto doc = json::parse(line, nullptr, false);
        if (doc.is_discarded()) {
            throw Error(ErrorCode::parse_error, "bad export line in " + path.string());
        }
        ExportedRecord e;
        e.id = doc.at("id").get<std::string>();
        e.question = doc.at("question").get<std::string>();
        e.solution = doc.at("solution").get<std::string>();
        e.answer = doc.at("answer").get<std::string>();
        e.primary_branch = doc.at("primary_branch").get<std::string>();
        e.secondary_branch = doc.at("secondary_branch").get<std::string>();
        e.difficulty_mean = doc.at("difficulty_mean").get<double>();
        e.origin = doc.at("origin").get<std::string>();
        if (!doc.at("lineage").is_null()) e.lineage = doc["lineage"].get<std::string>();
        records.push_back(std::move(e));
    }
    return records;
}

}  // namespace sandpipe
