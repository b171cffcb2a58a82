// sandpipe command-line interface.
//
// Subcommands:
//   run-all    execute every stage of the pipeline in order
//   run-stage  execute one named stage (priors must be complete)
//   resume     continue an interrupted run from the first incomplete stage
//   report     print per-stage yield, cumulative retention, and histograms
//   export     write the final dataset (dataset or instruct shape)
//
// Exit codes: 0 success, 2 config/validation error, 3 provider failure,
// 4 resume conflict.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sandpipe/sandpipe.hpp"

namespace {

using namespace sandpipe;

int exit_code_for(const Error& error) {
    switch (error.code()) {
        case ErrorCode::parse_error:
        case ErrorCode::validation_error:
        case ErrorCode::prior_stage_incomplete:
        case ErrorCode::incomplete_run:
            return 2;
        case ErrorCode::timeout:
        case ErrorCode::rate_limited:
        case ErrorCode::malformed_response:
        case ErrorCode::auth_failure:
        case ErrorCode::http_error:
            return 3;
        case ErrorCode::config_drift:
        case ErrorCode::run_locked:
            return 4;
        default:
            return 1;
    }
}

struct CommonArgs {
    std::string config_path;
    std::string run_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> limit;
    bool skip_hike = false;
    bool mock = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool need_config) {
    auto* config_opt =
        cmd->add_option("--config", args.config_path, "pipeline configuration file (JSON)");
    if (need_config) config_opt->required();
    const char* env_dir = std::getenv("SANDPIPE_RUN_DIR");
    if (env_dir) args.run_dir = env_dir;
    auto* dir_opt = cmd->add_option("--run-dir", args.run_dir,
                                    "run directory (default: $SANDPIPE_RUN_DIR)");
    if (!env_dir) dir_opt->required();
    cmd->add_option("--seed", args.seed, "override the configured seed");
    cmd->add_option("--limit", args.limit, "override limits.max_records");
    cmd->add_flag("--skip-hike", args.skip_hike, "omit the difficulty-hiking pass");
    cmd->add_flag("--mock", args.mock, "use the deterministic in-process providers");
}

PipelineConfig effective_config(const CommonArgs& args) {
    PipelineConfig config =
        args.config_path.empty() ? parse_config(nlohmann::json::object())
                                 : load_config(args.config_path);
    if (args.seed) config.seed = *args.seed;
    if (args.limit) config.max_records = *args.limit;
    if (args.mock) config.mock = true;
    return config;
}

RunOptions options_for(const CommonArgs& args) {
    RunOptions options;
    options.include_hike = !args.skip_hike;
    if (!args.config_path.empty()) {
        options.base_dir = fs::path(args.config_path).parent_path();
        if (options.base_dir.empty()) options.base_dir = ".";
    }
    return options;
}

void print_report(const YieldReport& report) {
    std::printf("%-24s %8s %9s %8s %11s %6s %10s\n", "stage", "in", "retained", "removed",
                "unresolved", "skip", "retention");
    for (const auto& s : report.stages) {
        std::printf("%-24s %8llu %9llu %8llu %11llu %6llu %10s\n", s.stage.c_str(),
                    static_cast<unsigned long long>(s.in_count),
                    static_cast<unsigned long long>(s.retained_count),
                    static_cast<unsigned long long>(s.removed_count),
                    static_cast<unsigned long long>(s.unresolved_count),
                    static_cast<unsigned long long>(s.skip_count),
                    s.retention_rate ? format_fixed(*s.retention_rate, 4).c_str() : "-");
    }
    if (report.cumulative_main) {
        std::printf("cumulative retention (main): %s\n",
                    format_fixed(*report.cumulative_main, 4).c_str());
    }
    if (report.cumulative_hike) {
        std::printf("cumulative retention (hike): %s\n",
                    format_fixed(*report.cumulative_hike, 4).c_str());
    }
    if (!report.histogram.empty()) {
        std::printf("difficulty histogram (rated records):\n");
        for (const auto& bin : report.histogram) {
            if (bin.count == 0) continue;
            std::printf("  [%4s, %4s%s %llu\n", format_fixed(bin.lo, 1).c_str(),
                        format_fixed(bin.lo + 0.5, 1).c_str(),
                        bin.lo + 0.5 >= 10.0 ? "]:" : "):",
                        static_cast<unsigned long long>(bin.count));
        }
    }
    if (report.hike_shift) {
        const auto& h = *report.hike_shift;
        std::printf("hike shift: mean %s -> %s, share >=6.0 %s%% -> %s%% (n %llu -> %llu)\n",
                    format_fixed(h.before_mean, 2).c_str(), format_fixed(h.after_mean, 2).c_str(),
                    format_fixed(100.0 * h.before_share_6plus, 1).c_str(),
                    format_fixed(100.0 * h.after_share_6plus, 1).c_str(),
                    static_cast<unsigned long long>(h.before_count),
                    static_cast<unsigned long long>(h.after_count));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"synthetic math problem pipeline"};
    app.require_subcommand(1);

    CommonArgs run_all_args;
    auto* cmd_run_all = app.add_subcommand("run-all", "execute every stage in order");
    add_common(cmd_run_all, run_all_args, true);

    CommonArgs run_stage_args;
    std::string stage_name;
    bool force = false;
    auto* cmd_run_stage = app.add_subcommand("run-stage", "execute one stage");
    cmd_run_stage->add_option("stage", stage_name, "stage name, e.g. dedup")->required();
    cmd_run_stage->add_flag("--force", force, "re-run the stage even if already complete");
    add_common(cmd_run_stage, run_stage_args, true);

    CommonArgs resume_args;
    bool force_new = false;
    auto* cmd_resume = app.add_subcommand("resume", "continue an interrupted run");
    cmd_resume->add_flag("--force-new", force_new,
                         "discard the existing manifest and start over");
    add_common(cmd_resume, resume_args, true);

    CommonArgs report_args;
    auto* cmd_report = app.add_subcommand("report", "print the yield report");
    add_common(cmd_report, report_args, false);

    CommonArgs export_args;
    std::string format = "dataset";
    std::string out_path;
    auto* cmd_export = app.add_subcommand("export", "write the final dataset");
    cmd_export->add_option("--format", format, "dataset | instruct")
        ->check(CLI::IsMember({"dataset", "instruct"}));
    cmd_export->add_option("--output", out_path, "output path (default inside run dir)");
    add_common(cmd_export, export_args, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run_all->parsed()) {
            RunManifest manifest = run_all(effective_config(run_all_args), run_all_args.run_dir,
                                           options_for(run_all_args));
            print_report(compute_yield_report(manifest, fs::path(run_all_args.run_dir)));
            std::printf("run %s: %zu stages complete\n", manifest.run_id.c_str(),
                        manifest.stages.size());
        } else if (cmd_run_stage->parsed()) {
            StageReport report = run_single_stage(effective_config(run_stage_args),
                                                  run_stage_args.run_dir, stage_name, force,
                                                  options_for(run_stage_args));
            std::printf("%s: in %llu retained %llu removed %llu unresolved %llu skip %llu\n",
                        report.stage.c_str(), static_cast<unsigned long long>(report.in_count),
                        static_cast<unsigned long long>(report.retained_count),
                        static_cast<unsigned long long>(report.removed_count),
                        static_cast<unsigned long long>(report.unresolved_count),
                        static_cast<unsigned long long>(report.skip_count));
        } else if (cmd_resume->parsed()) {
            RunManifest manifest = resume(effective_config(resume_args), resume_args.run_dir,
                                          force_new, options_for(resume_args));
            std::printf("run %s resumed; all stages %s\n", manifest.run_id.c_str(),
                        manifest.all_complete() ? "complete" : "not yet complete");
        } else if (cmd_report->parsed()) {
            RunManifest manifest = read_manifest(report_args.run_dir);
            print_report(compute_yield_report(manifest, fs::path(report_args.run_dir)));
        } else if (cmd_export->parsed()) {
            fs::path written =
                export_dataset(export_args.run_dir, export_format_from_string(format),
                               out_path.empty() ? std::nullopt
                                                : std::optional<fs::path>(out_path));
            std::printf("wrote %s\n", written.c_str());
        }
    } catch (const Error& error) {
        std::cerr << "error: " << error.what() << "\n";
        return exit_code_for(error);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
