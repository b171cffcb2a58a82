#pragma once
// Stage orchestration: planning, execution, persistence, and resumption.
//
// A run directory holds one line-delimited file per stage plus manifest.json.
// Stages execute strictly in order; each writes its output atomically and
// then records status, report, and output digest in the manifest. Resuming
// re-reads the manifest, verifies the config digest and the digests of all
// complete stages, and continues from the first non-complete stage.
//
// Hiked records re-enter at the solutions stage and traverse every
// downstream filter as their own pass (stages named hike_*), so the final
// dataset is main-pass novelty survivors plus hike-pass novelty survivors.

#include <chrono>
#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sandpipe/filtering/consistency.hpp"
#include "sandpipe/filtering/decontam.hpp"
#include "sandpipe/filtering/dedup.hpp"
#include "sandpipe/filtering/difficulty.hpp"
#include "sandpipe/filtering/novelty.hpp"
#include "sandpipe/generation/generate.hpp"
#include "sandpipe/generation/hike.hpp"
#include "sandpipe/pipeline/export.hpp"
#include "sandpipe/pipeline/manifest.hpp"
#include "sandpipe/pipeline/providers.hpp"
#include "sandpipe/pipeline/serialization.hpp"
#include "sandpipe/util/parallel.hpp"

namespace sandpipe {

struct StageDef {
    std::string name;        // manifest name, e.g. "hike_dedup"
    Stage kind;              // operation performed
    int ordinal;             // file prefix
    std::string input_stage;  // predecessor whose output this stage reads ("" for questions)
    bool hike_pass = false;
};

inline std::vector<StageDef> plan_stages(bool include_hike) {
    std::vector<StageDef> defs = {
        {"questions", Stage::questions, 1, "", false},
        {"solutions", Stage::solutions, 2, "questions", false},
        {"consistency", Stage::consistency, 3, "solutions", false},
        {"dedup", Stage::dedup, 4, "consistency", false},
        {"decontam", Stage::decontam, 5, "dedup", false},
        {"difficulty_rate", Stage::difficulty_rate, 6, "decontam", false},
        {"difficulty_filter", Stage::difficulty_filter, 7, "difficulty_rate", false},
        {"novelty", Stage::novelty, 8, "difficulty_filter", false},
    };
    if (include_hike) {
        defs.push_back({"hike", Stage::hike, 9, "novelty", true});
        defs.push_back({"hike_solutions", Stage::solutions, 10, "hike", true});
        defs.push_back({"hike_consistency", Stage::consistency, 11, "hike_solutions", true});
        defs.push_back({"hike_dedup", Stage::dedup, 12, "hike_consistency", true});
        defs.push_back({"hike_decontam", Stage::decontam, 13, "hike_dedup", true});
        defs.push_back({"hike_difficulty_rate", Stage::difficulty_rate, 14, "hike_decontam", true});
        defs.push_back(
            {"hike_difficulty_filter", Stage::difficulty_filter, 15, "hike_difficulty_rate", true});
        defs.push_back({"hike_novelty", Stage::novelty, 16, "hike_difficulty_filter", true});
    }
    return defs;
}

inline std::string stage_file_name(const StageDef& def) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%02d", def.ordinal);
    return std::string(buf) + "_" + def.name + ".jsonl";
}

// Advisory exclusive lock on the run directory; released automatically when
// the process exits, so crashes never wedge a run.
class RunLock {
public:
    explicit RunLock(const fs::path& run_dir) {
        fs::create_directories(run_dir);
        path_ = run_dir / ".lock";
        fd_ = ::open(path_.c_str(), O_CREAT | O_RDWR, 0644);
        if (fd_ < 0) throw Error(ErrorCode::io_error, "cannot open lock file " + path_.string());
        if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
            ::close(fd_);
            fd_ = -1;
            throw Error(ErrorCode::run_locked, "another process holds " + path_.string());
        }
    }

    ~RunLock() {
        if (fd_ >= 0) {
            ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
    }

    RunLock(const RunLock&) = delete;
    RunLock& operator=(const RunLock&) = delete;

private:
    fs::path path_;
    int fd_ = -1;
};

struct RunOptions {
    bool include_hike = true;
    // Test hook for crash/resume checks: stop cleanly after this stage
    // commits.
    std::optional<std::string> stop_after;
    fs::path base_dir = ".";  // resolves relative benchmark paths
};

class PipelineEngine {
public:
    PipelineEngine(PipelineConfig config, fs::path run_dir, const RunOptions& options)
        : config_(std::move(config)),
          run_dir_(std::move(run_dir)),
          options_(options),
          lock_(run_dir_),
          taxonomy_(config_.taxonomy_path
                        ? load_taxonomy_file(resolve_path(*config_.taxonomy_path))
                        : default_taxonomy()),
          providers_(build_providers(config_)) {}

    // Fresh run (or continuation when the directory already holds a matching
    // manifest). Executes stages in order and emits final.jsonl at the end.
    RunManifest run_all() {
        if (file_exists(manifest_path(run_dir_))) {
            manifest_ = read_manifest(run_dir_);
            check_config_digest();
        } else {
            init_manifest();
        }
        execute_pending();
        return manifest_;
    }

    // Continue an interrupted run; complete stages are never recomputed.
    RunManifest resume(bool force_new) {
        if (!file_exists(manifest_path(run_dir_))) {
            throw Error(ErrorCode::validation_error,
                        "no manifest in " + run_dir_.string() + "; nothing to resume");
        }
        if (force_new) {
            init_manifest();
        } else {
            manifest_ = read_manifest(run_dir_);
            check_config_digest();
            verify_complete_digests();
        }
        execute_pending();
        return manifest_;
    }

    // One stage by name. Prior stages must be complete; re-running a
    // complete stage without force verifies its digest and is a no-op.
    StageReport run_single(const std::string& stage_name, bool force) {
        if (file_exists(manifest_path(run_dir_))) {
            manifest_ = read_manifest(run_dir_);
            check_config_digest();
        } else {
            init_manifest();
        }
        const auto defs = current_defs();
        const StageDef* target = nullptr;
        for (const auto& def : defs) {
            if (def.name == stage_name) {
                target = &def;
                break;
            }
            if (manifest_.find(def.name)->status != StageStatus::complete) {
                throw Error(ErrorCode::prior_stage_incomplete,
                            "stage " + def.name + " must complete before " + stage_name);
            }
        }
        if (!target) throw Error(ErrorCode::validation_error, "unknown stage: " + stage_name);
        StageEntry* entry = manifest_.find(target->name);
        if (entry->status == StageStatus::complete && !force) {
            verify_stage_digest(*target, *entry);
            return *entry->report;
        }
        StageReport report = execute_stage(*target);
        maybe_write_final();
        return report;
    }

    const RunManifest& manifest() const { return manifest_; }

private:
    fs::path resolve_path(const fs::path& p) const {
        return p.is_relative() ? options_.base_dir / p : p;
    }

    std::vector<StageDef> current_defs() const {
        // The manifest's planned stage list wins once it exists, so resumes
        // do not need the original --skip-hike flag.
        if (!manifest_.stages.empty()) {
            bool hike = manifest_.find("hike") != nullptr;
            return plan_stages(hike);
        }
        return plan_stages(options_.include_hike);
    }

    void init_manifest() {
        manifest_ = RunManifest{};
        manifest_.config_snapshot = config_.snapshot();
        manifest_.config_digest = config_.digest();
        manifest_.run_id = "run-" + manifest_.config_digest.substr(0, 12);
        for (const auto& def : plan_stages(options_.include_hike)) {
            StageEntry entry;
            entry.stage = def.name;
            entry.output_file = stage_file_name(def);
            manifest_.stages.push_back(std::move(entry));
        }
        write_manifest(run_dir_, manifest_);
    }

    void check_config_digest() const {
        if (manifest_.config_digest != config_.digest()) {
            throw Error(ErrorCode::config_drift,
                        "config digest " + config_.digest() + " does not match manifest " +
                            manifest_.config_digest + " (use --force-new to restart)");
        }
    }

    void verify_stage_digest(const StageDef& def, const StageEntry& entry) const {
        if (!entry.output_digest) return;
        fs::path path = run_dir_ / stage_file_name(def);
        if (!file_exists(path) || sha256_hex(read_file(path)) != *entry.output_digest) {
            throw Error(ErrorCode::validation_error,
                        "output of complete stage " + def.name + " does not match its digest");
        }
    }

    void verify_complete_digests() const {
        for (const auto& def : current_defs()) {
            const StageEntry* entry = manifest_.find(def.name);
            if (entry && entry->status == StageStatus::complete) {
                verify_stage_digest(def, *entry);
            }
        }
    }

    void execute_pending() {
        for (const auto& def : current_defs()) {
            StageEntry* entry = manifest_.find(def.name);
            if (entry->status != StageStatus::complete) {
                execute_stage(def);
            }
            if (options_.stop_after && def.name == *options_.stop_after) break;
        }
        maybe_write_final();
    }

    struct CallCounts {
        std::uint64_t teacher, judge, solver, embedder, search;
    };

    CallCounts snapshot_calls() const {
        return {providers_.teacher->call_count(), providers_.judge->call_count(),
                providers_.solver->call_count(), providers_.embedder->call_count(),
                providers_.search->call_count()};
    }

    StageReport execute_stage(const StageDef& def) {
        StageEntry* entry = manifest_.find(def.name);
        entry->status = StageStatus::running;
        entry->report.reset();
        entry->output_digest.reset();
        write_manifest(run_dir_, manifest_);

        auto started = std::chrono::steady_clock::now();
        CallCounts before = snapshot_calls();

        StageReport report;
        report.stage = def.name;
        std::vector<ProblemRecord> retained, removed, unresolved;
        std::vector<std::string> skip_details;

        std::vector<ProblemRecord> input;
        if (!def.input_stage.empty()) {
            const StageEntry* prior = manifest_.find(def.input_stage);
            input = read_records(run_dir_ / prior->output_file);
        }

        switch (def.kind) {
            case Stage::questions:
                run_questions(report, retained, skip_details);
                break;
            case Stage::solutions:
                run_solutions(def, input, report, retained, unresolved);
                break;
            case Stage::consistency:
                run_consistency(def, input, report, retained, removed);
                break;
            case Stage::dedup:
                run_dedup(def, input, report, retained, removed);
                break;
            case Stage::decontam:
                run_decontam(def, input, report, retained, removed, unresolved);
                break;
            case Stage::difficulty_rate:
                run_rating(def, input, report, retained, unresolved);
                break;
            case Stage::difficulty_filter:
                run_difficulty_filter(def, input, report, retained, removed, unresolved);
                break;
            case Stage::novelty:
                run_novelty(def, input, report, retained, removed, unresolved);
                break;
            case Stage::hike:
                run_hike(def, input, report, retained, skip_details);
                break;
        }

        report.retained_count = retained.size();
        report.removed_count = removed.size();
        report.unresolved_count = unresolved.size();
        report.skip_count = skip_details.size();
        report.finalize_rate();
        CallCounts after = snapshot_calls();
        auto add_calls = [&](const char* role, std::uint64_t delta) {
            if (delta > 0) report.provider_call_counts[role] = delta;
        };
        add_calls("teacher", after.teacher - before.teacher);
        add_calls("judge", after.judge - before.judge);
        add_calls("solver", after.solver - before.solver);
        add_calls("embedder", after.embedder - before.embedder);
        add_calls("search", after.search - before.search);
        report.wall_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                  started)
                .count());

        fs::path out_path = run_dir_ / stage_file_name(def);
        write_records(out_path, retained);
        write_sidecar(def, "removed", removed);
        write_sidecar(def, "unresolved", unresolved);
        if (!skip_details.empty()) {
            json doc = json::array();
            for (const auto& d : skip_details) doc.push_back(d);
            atomic_write_file(sidecar_path(def, "skipped"), doc.dump(2) + "\n");
        }

        entry->report = report;
        entry->output_digest = sha256_hex(read_file(out_path));
        entry->status = StageStatus::complete;
        write_manifest(run_dir_, manifest_);
        return report;
    }

    fs::path sidecar_path(const StageDef& def, const char* kind) const {
        char buf[8];
        std::snprintf(buf, sizeof(buf), "%02d", def.ordinal);
        return run_dir_ / (std::string(buf) + "_" + def.name + "_" + kind + ".jsonl");
    }

    void write_sidecar(const StageDef& def, const char* kind,
                       const std::vector<ProblemRecord>& records) {
        if (records.empty()) return;
        write_records(sidecar_path(def, kind), records);
    }

    std::uint64_t stage_seed(const StageDef& def) const {
        return derive_seed(config_.seed, def.name);
    }

    // ---- per-stage bodies ---------------------------------------------

    void run_questions(StageReport& report, std::vector<ProblemRecord>& retained,
                       std::vector<std::string>& skip_details) {
        GenerationParams params;
        params.model = config_.role(Role::teacher).model;
        params.temperature = config_.question_temperature;
        params.seed = config_.seed;
        params.workers = config_.max_concurrent;
        Rng rng(derive_seed(config_.seed, "question-branches"));
        QuestionBatch batch =
            generate_questions(config_.max_records, taxonomy_, *providers_.teacher, params, rng);
        // individual provider failures are recorded skips, but a teacher that
        // failed every single call means the endpoint is down: abort the
        // stage (it stays pending, inputs intact) instead of emitting an
        // empty dataset
        if (batch.records.empty() && batch.provider_failures == config_.max_records &&
            batch.first_provider_error) {
            throw *batch.first_provider_error;
        }
        report.in_count = config_.max_records;
        retained = std::move(batch.records);
        skip_details = std::move(batch.skip_details);
    }

    void run_solutions(const StageDef& def, const std::vector<ProblemRecord>& input,
                       StageReport& report, std::vector<ProblemRecord>& retained,
                       std::vector<ProblemRecord>& unresolved) {
        report.in_count = input.size();
        SolutionParams params;
        params.model = config_.role(Role::teacher).model;
        params.k = config_.k_solutions;
        params.temperature = config_.solution_temperature;
        params.seed = stage_seed(def);
        struct Outcome {
            ProblemRecord record;
            bool ok = false;
        };
        auto outcomes =
            parallel_map(input, config_.max_concurrent, [&](const ProblemRecord& r, size_t) {
                Outcome outcome;
                try {
                    outcome.record = generate_solutions(r, *providers_.teacher, params);
                    outcome.ok = true;
                } catch (const Error&) {
                    outcome.record = r;  // retryable on a forced re-run
                }
                return outcome;
            });
        for (auto& o : outcomes) {
            (o.ok ? retained : unresolved).push_back(std::move(o.record));
        }
    }

    void run_consistency(const StageDef& def, const std::vector<ProblemRecord>& input,
                         StageReport& report, std::vector<ProblemRecord>& retained,
                         std::vector<ProblemRecord>& removed) {
        report.in_count = input.size();
        ConsistencyResult result = self_consistency_filter(input, stage_seed(def));
        retained = std::move(result.retained);
        removed = std::move(result.removed);
    }

    void run_dedup(const StageDef& def, std::vector<ProblemRecord> input, StageReport& report,
                   std::vector<ProblemRecord>& retained, std::vector<ProblemRecord>& removed) {
        report.in_count = input.size();
        DedupOptions options;
        options.threshold = config_.dedup_threshold;
        std::vector<ProblemRecord> preseed;
        if (def.hike_pass) {
            // The main dataset is frozen by the time hiked records re-enter:
            // it seeds the sweep so duplicates of existing problems are
            // dropped, but its own records can never be removed here.
            preseed = read_records(run_dir_ / manifest_.find("novelty")->output_file);
        }
        DedupResult result = dedup(std::move(input), *providers_.embedder, options,
                                   preseed.empty() ? nullptr : &preseed);
        retained = std::move(result.retained);
        removed = std::move(result.removed);
        json decisions = json::array();
        for (const auto& d : result.decisions) {
            decisions.push_back({{"kept_id", d.kept_id},
                                 {"removed_id", d.removed_id},
                                 {"similarity", d.similarity}});
        }
        atomic_write_file(sidecar_path(def, "decisions"), decisions.dump(2) + "\n");
    }

    void run_decontam(const StageDef& def, const std::vector<ProblemRecord>& input,
                      StageReport& report, std::vector<ProblemRecord>& retained,
                      std::vector<ProblemRecord>& removed,
                      std::vector<ProblemRecord>& unresolved) {
        report.in_count = input.size();
        auto items = load_benchmarks(config_, options_.base_dir);
        if (items.empty()) {
            // nothing to decontaminate against
            for (const auto& r : input) {
                ProblemRecord out = r;
                out.stage_history.push_back(
                    {Stage::decontam, Verdict::passed, "no benchmarks configured"});
                retained.push_back(std::move(out));
            }
            return;
        }
        BenchmarkIndex index = build_benchmark_index(items, *providers_.embedder);
        std::uint64_t seed = stage_seed(def);
        struct Outcome {
            ProblemRecord record;
            int state = 0;  // 0 keep, 1 remove, 2 unresolved
        };
        auto outcomes =
            parallel_map(input, config_.max_concurrent, [&](const ProblemRecord& r, size_t) {
                Outcome outcome;
                outcome.record = r;
                try {
                    DecontamOutcome result = decontaminate(
                        r, index, *providers_.embedder, *providers_.judge,
                        config_.role(Role::judge).model,
                        static_cast<size_t>(config_.decontam_neighbors), seed);
                    if (result.keep) {
                        outcome.record.stage_history.push_back(
                            {Stage::decontam, Verdict::passed, ""});
                    } else {
                        outcome.state = 1;
                        outcome.record.stage_history.push_back(
                            {Stage::decontam, Verdict::removed,
                             "matches benchmark " + result.matched_benchmark});
                    }
                } catch (const Error&) {
                    outcome.state = 2;  // held for manual resolution
                }
                return outcome;
            });
        for (auto& o : outcomes) {
            if (o.state == 0) retained.push_back(std::move(o.record));
            else if (o.state == 1) removed.push_back(std::move(o.record));
            else unresolved.push_back(std::move(o.record));
        }
    }

    void run_rating(const StageDef& def, const std::vector<ProblemRecord>& input,
                    StageReport& report, std::vector<ProblemRecord>& retained,
                    std::vector<ProblemRecord>& unresolved) {
        report.in_count = input.size();
        RatingParams params;
        params.model = config_.role(Role::judge).model;
        params.runs = config_.rating_runs;
        params.seed = stage_seed(def);
        struct Outcome {
            ProblemRecord record;
            bool ok = false;
        };
        auto outcomes =
            parallel_map(input, config_.max_concurrent, [&](const ProblemRecord& r, size_t) {
                Outcome outcome;
                outcome.record = r;
                try {
                    DifficultyRating rating = rate_difficulty(r, *providers_.judge, params);
                    outcome.record.rating = rating;
                    outcome.record.stage_history.push_back(
                        {Stage::difficulty_rate, Verdict::transformed,
                         "mean " + format_fixed(rating.mean_score, 4)});
                    outcome.ok = true;
                } catch (const Error&) {
                    // InsufficientRatings or provider failure: held
                }
                return outcome;
            });
        for (auto& o : outcomes) {
            (o.ok ? retained : unresolved).push_back(std::move(o.record));
        }
    }

    void run_difficulty_filter(const StageDef& def, const std::vector<ProblemRecord>& input,
                               StageReport& report, std::vector<ProblemRecord>& retained,
                               std::vector<ProblemRecord>& removed,
                               std::vector<ProblemRecord>& unresolved) {
        report.in_count = input.size();
        SolverParams params;
        params.model = config_.role(Role::solver).model;
        params.attempts = config_.solver_attempts;
        params.temperature = config_.solver_temperature;
        params.seed = stage_seed(def);
        struct Outcome {
            ProblemRecord record;
            int state = 0;
        };
        auto outcomes =
            parallel_map(input, config_.max_concurrent, [&](const ProblemRecord& r, size_t) {
                Outcome outcome;
                outcome.record = r;
                const ReasoningTrace* canonical = r.canonical_trace();
                if (!canonical || !canonical->answer) {
                    outcome.state = 2;
                    return outcome;
                }
                try {
                    DifficultyFilterOutcome result =
                        difficulty_filter(r, *providers_.solver, *canonical->answer, params);
                    if (result.keep) {
                        outcome.record.stage_history.push_back(
                            {Stage::difficulty_filter, Verdict::passed, "solver failed"});
                    } else {
                        outcome.state = 1;
                        outcome.record.stage_history.push_back(
                            {Stage::difficulty_filter, Verdict::removed, "solver succeeded"});
                    }
                } catch (const Error&) {
                    outcome.state = 2;
                }
                return outcome;
            });
        for (auto& o : outcomes) {
            if (o.state == 0) retained.push_back(std::move(o.record));
            else if (o.state == 1) removed.push_back(std::move(o.record));
            else unresolved.push_back(std::move(o.record));
        }
    }

    void run_novelty(const StageDef& def, const std::vector<ProblemRecord>& input,
                     StageReport& report, std::vector<ProblemRecord>& retained,
                     std::vector<ProblemRecord>& removed, std::vector<ProblemRecord>& unresolved) {
        (void)def;
        report.in_count = input.size();
        NoveltyParams params;
        params.tau = config_.novelty_tau;
        params.k = config_.novelty_k;
        struct Outcome {
            ProblemRecord record;
            int state = 0;
        };
        auto outcomes =
            parallel_map(input, config_.max_concurrent, [&](const ProblemRecord& r, size_t) {
                Outcome outcome;
                outcome.record = r;
                try {
                    NoveltyOutcome result =
                        novelty_filter(r, *providers_.search, *providers_.embedder, params);
                    std::string detail =
                        "max_similarity " + format_fixed(result.evidence.max_similarity, 4) +
                        " over " + std::to_string(result.evidence.result_count) + " results";
                    if (result.keep) {
                        outcome.record.stage_history.push_back(
                            {Stage::novelty, Verdict::passed, detail});
                    } else {
                        outcome.state = 1;
                        outcome.record.stage_history.push_back(
                            {Stage::novelty, Verdict::removed, detail});
                    }
                } catch (const Error&) {
                    outcome.state = 2;  // held, never silently kept
                }
                return outcome;
            });
        for (auto& o : outcomes) {
            if (o.state == 0) retained.push_back(std::move(o.record));
            else if (o.state == 1) removed.push_back(std::move(o.record));
            else unresolved.push_back(std::move(o.record));
        }
    }

    void run_hike(const StageDef& def, const std::vector<ProblemRecord>& input,
                  StageReport& report, std::vector<ProblemRecord>& retained,
                  std::vector<std::string>& skip_details) {
        report.in_count = input.size();
        HikeParams params;
        params.model = config_.role(Role::teacher).model;
        params.temperature = config_.question_temperature;
        params.target_difficulty = config_.hike_target;
        params.seed = stage_seed(def);
        struct Outcome {
            std::optional<ProblemRecord> record;
            std::string skip_detail;
        };
        auto outcomes =
            parallel_map(input, config_.max_concurrent, [&](const ProblemRecord& r, size_t) {
                Outcome outcome;
                try {
                    outcome.record = hike_difficulty(r, taxonomy_, *providers_.teacher, params);
                } catch (const Error& e) {
                    outcome.skip_detail = r.id + ": " + e.what();
                }
                return outcome;
            });
        std::set<std::string> seen;
        for (const auto& r : input) seen.insert(r.id);
        for (auto& o : outcomes) {
            if (!o.record) {
                skip_details.push_back(o.skip_detail);
                continue;
            }
            if (!seen.insert(o.record->id).second) {
                skip_details.push_back(o.record->id + ": duplicate id after rewrite");
                continue;
            }
            retained.push_back(std::move(*o.record));
        }
    }

    // ---- final dataset -------------------------------------------------

    void maybe_write_final() {
        if (!manifest_.all_complete()) return;
        atomic_write_file(run_dir_ / "final.jsonl",
                          export_lines(final_records(), ExportFormat::dataset));
    }

public:
    // Main-pass novelty survivors plus (when the hike chain ran) hike-pass
    // novelty survivors.
    std::vector<ProblemRecord> final_records() const {
        const StageEntry* novelty = manifest_.find("novelty");
        if (!novelty || novelty->status != StageStatus::complete) {
            throw Error(ErrorCode::incomplete_run, "novelty stage is not complete");
        }
        std::vector<ProblemRecord> finals = read_records(run_dir_ / novelty->output_file);
        if (const StageEntry* hike_novelty = manifest_.find("hike_novelty")) {
            if (hike_novelty->status != StageStatus::complete) {
                throw Error(ErrorCode::incomplete_run, "hike chain is not complete");
            }
            auto hiked = read_records(run_dir_ / hike_novelty->output_file);
            finals.insert(finals.end(), hiked.begin(), hiked.end());
        }
        return finals;
    }

private:
    PipelineConfig config_;
    fs::path run_dir_;
    RunOptions options_;
    RunLock lock_;
    Taxonomy taxonomy_;
    ProviderBundle providers_;
    RunManifest manifest_;
};

inline RunManifest run_all(const PipelineConfig& config, const fs::path& run_dir,
                           const RunOptions& options = {}) {
    PipelineEngine engine(config, run_dir, options);
    return engine.run_all();
}

inline RunManifest resume(const PipelineConfig& config, const fs::path& run_dir,
                          bool force_new = false, const RunOptions& options = {}) {
    PipelineEngine engine(config, run_dir, options);
    return engine.resume(force_new);
}

inline StageReport run_single_stage(const PipelineConfig& config, const fs::path& run_dir,
                                    const std::string& stage, bool force,
                                    const RunOptions& options = {}) {
    PipelineEngine engine(config, run_dir, options);
    return engine.run_single(stage, force);
}

}  // namespace sandpipe
