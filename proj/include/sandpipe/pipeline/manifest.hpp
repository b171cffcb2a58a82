#pragma once
// Run manifest: the planned stage list, per-stage status and report, output
// file digests, and the config snapshot that locks resumed runs. Stored as
// manifest.json in the run directory and rewritten atomically.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sandpipe/pipeline/config.hpp"
#include "sandpipe/util/digest.hpp"
#include "sandpipe/util/io.hpp"

namespace sandpipe {

enum class StageStatus { pending, running, complete };

inline std::string_view to_string(StageStatus s) {
    switch (s) {
        case StageStatus::pending: return "pending";
        case StageStatus::running: return "running";
        case StageStatus::complete: return "complete";
    }
    return "?";
}

inline StageStatus stage_status_from_string(const std::string& s) {
    if (s == "pending") return StageStatus::pending;
    if (s == "running") return StageStatus::running;
    if (s == "complete") return StageStatus::complete;
    throw Error(ErrorCode::parse_error, "unknown stage status: " + s);
}

struct StageReport {
    std::string stage;
    std::uint64_t in_count = 0;
    std::uint64_t retained_count = 0;
    std::uint64_t removed_count = 0;
    std::uint64_t unresolved_count = 0;
    std::uint64_t skip_count = 0;
    std::optional<double> retention_rate;  // absent when in_count == 0
    std::uint64_t wall_ms = 0;
    std::map<std::string, std::uint64_t> provider_call_counts;

    void finalize_rate() {
        if (in_count > 0) {
            retention_rate = static_cast<double>(retained_count) / static_cast<double>(in_count);
        } else {
            retention_rate.reset();
        }
    }
};

inline nlohmann::json to_json(const StageReport& report) {
    nlohmann::json doc;
    doc["stage"] = report.stage;
    doc["in_count"] = report.in_count;
    doc["retained_count"] = report.retained_count;
    doc["removed_count"] = report.removed_count;
    doc["unresolved_count"] = report.unresolved_count;
    doc["skip_count"] = report.skip_count;
    doc["retention_rate"] = report.retention_rate ? nlohmann::json(*report.retention_rate)
                                                  : nlohmann::json(nullptr);
    doc["wall_ms"] = report.wall_ms;
    doc["provider_call_counts"] = report.provider_call_counts;
    return doc;
}

inline StageReport stage_report_from_json(const nlohmann::json& doc) {
    StageReport report;
    report.stage = doc.at("stage").get<std::string>();
    report.in_count = doc.at("in_count").get<std::uint64_t>();
    report.retained_count = doc.at("retained_count").get<std::uint64_t>();
    report.removed_count = doc.at("removed_count").get<std::uint64_t>();
    report.unresolved_count = doc.at("unresolved_count").get<std::uint64_t>();
    report.skip_count = doc.at("skip_count").get<std::uint64_t>();
    if (!doc.at("retention_rate").is_null()) {
        report.retention_rate = doc["retention_rate"].get<double>();
    }
    report.wall_ms = doc.at("wall_ms").get<std::uint64_t>();
    if (doc.contains("provider_call_counts")) {
        report.provider_call_counts =
            doc["provider_call_counts"].get<std::map<std::string, std::uint64_t>>();
    }
    return report;
}

struct StageEntry {
    std::string stage;       // e.g. "dedup" or "hike_dedup"
    std::string output_file;  // e.g. "04_dedup.jsonl"
    StageStatus status = StageStatus::pending;
    std::optional<StageReport> report;
    std::optional<std::string> output_digest;
};

struct RunManifest {
    std::string run_id;
    std::string config_digest;
    nlohmann::json config_snapshot;
    std::vector<StageEntry> stages;

    StageEntry* find(const std::string& stage) {
        for (auto& entry : stages) {
            if (entry.stage == stage) return &entry;
        }
        return nullptr;
    }

    const StageEntry* find(const std::string& stage) const {
        for (const auto& entry : stages) {
            if (entry.stage == stage) return &entry;
        }
        return nullptr;
    }

    bool all_complete() const {
        for (const auto& entry : stages) {
            if (entry.status != StageStatus::complete) return false;
        }
        return true;
    }
};

inline nlohmann::json to_json(const RunManifest& manifest) {
    nlohmann::json doc;
    doc["run_id"] = manifest.run_id;
    doc["config_digest"] = manifest.config_digest;
    doc["config"] = manifest.config_snapshot;
    nlohmann::json stages = nlohmann::json::array();
    for (const auto& entry : manifest.stages) {
        nlohmann::json e;
        e["stage"] = entry.stage;
        e["output_file"] = entry.output_file;
        e["status"] = std::string(to_string(entry.status));
        e["report"] = entry.report ? to_json(*entry.report) : nlohmann::json(nullptr);
        e["output_digest"] =
            entry.output_digest ? nlohmann::json(*entry.output_digest) : nlohmann::json(nullptr);
        stages.push_back(e);
    }
    doc["stages"] = stages;
    return doc;
}

inline RunManifest manifest_from_json(const nlohmann::json& doc) {
    RunManifest manifest;
    manifest.run_id = doc.at("run_id").get<std::string>();
    manifest.config_digest = doc.at("config_digest").get<std::string>();
    manifest.config_snapshot = doc.at("config");
    for (const auto& e : doc.at("stages")) {
        StageEntry entry;
        entry.stage = e.at("stage").get<std::string>();
        entry.output_file = e.at("output_file").get<std::string>();
        entry.status = stage_status_from_string(e.at("status").get<std::string>());
        if (!e.at("report").is_null()) entry.report = stage_report_from_json(e["report"]);
        if (!e.at("output_digest").is_null()) {
            entry.output_digest = e["output_digest"].get<std::string>();
        }
        manifest.stages.push_back(std::move(entry));
    }
    return manifest;
}

inline fs::path manifest_path(const fs::path& run_dir) { return run_dir / "manifest.json"; }

inline void write_manifest(const fs::path& run_dir, const RunManifest& manifest) {
    atomic_write_file(manifest_path(run_dir), to_json(manifest).dump(2) + "\n");
}

inline RunManifest read_manifest(const fs::path& run_dir) {
    auto doc = nlohmann::json::parse(read_file(manifest_path(run_dir)), nullptr, false);
    if (doc.is_discarded()) {
        throw Error(ErrorCode::parse_error, "manifest.json is not valid JSON");
    }
    return manifest_from_json(doc);
}

}  // namespace sandpipe
