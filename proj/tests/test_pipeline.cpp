#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>

#include "sandpipe/pipeline/config.hpp"
#include "sandpipe/pipeline/export.hpp"
#include "sandpipe/pipeline/report.hpp"
#include "sandpipe/pipeline/stages.hpp"

using namespace sandpipe;

namespace {

auto has_code(ErrorCode code) {
    return Catch::Matchers::Predicate<Error>(
        [code](const Error& e) { return e.code() == code; },
        "error code " + std::string(to_string(code)));
}

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("sandpipe_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write_config(const fs::path& dir, const std::string& body,
                      const std::string& name = "config.json") {
    fs::path path = dir / name;
    atomic_write_file(path, body);
    return path;
}

PipelineConfig mock_config(std::uint64_t seed, size_t max_records) {
    nlohmann::json doc = {{"mock", true},
                          {"seed", seed},
                          {"limits", {{"max_records", max_records}, {"max_concurrent", 4}}}};
    return parse_config(doc);
}

ProblemRecord solved_record(const std::string& question, const std::string& a0,
                            const std::string& a1) {
    ProblemRecord record;
    record.question = question;
    record.id = record_id(question);
    record.cogen_solution = "cogen \\boxed{1}";
    record.primary_branch = "Algebra";
    record.secondary_branch = "Geometry";
    record.origin = Origin::generated;
    record.stage_history.push_back({Stage::questions, Verdict::passed, ""});
    record.traces.push_back(make_trace("first \\boxed{" + a0 + "}", 0.6, 0));
    record.traces.push_back(make_trace("second \\boxed{" + a1 + "}", 0.6, 1));
    record.stage_history.push_back({Stage::solutions, Verdict::transformed, "2 traces"});
    return record;
}

}  // namespace

TEST_CASE("load_config: empty file yields the documented defaults") {
    fs::path dir = fresh_dir("config_defaults");
    PipelineConfig config = load_config(write_config(dir, ""));
    CHECK(config.k_solutions == 2);
    CHECK(config.rating_runs == 3);
    CHECK(config.dedup_threshold == 0.99);
    CHECK(config.novelty_tau == 0.85);
    CHECK(config.novelty_k == 10);
    CHECK(config.decontam_neighbors == 5);
    CHECK(config.question_temperature == 0.8);
    CHECK(config.solution_temperature == 0.6);
    CHECK(config.solver_temperature == 0.0);
    CHECK(config.hike_target == 8.0);
    CHECK(config.solver_attempts == 1);
    CHECK_FALSE(config.mock);
}

TEST_CASE("load_config: validation names the offending key") {
    fs::path dir = fresh_dir("config_invalid");
    try {
        load_config(write_config(dir, R"({"thresholds": {"novelty_tau": 1.5}})"));
        FAIL("expected ValidationError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::validation_error);
        CHECK(std::string(e.what()).find("thresholds.novelty_tau") != std::string::npos);
    }
    try {
        load_config(write_config(dir, R"({"foo": 1})"));
        FAIL("expected ValidationError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::validation_error);
        CHECK(std::string(e.what()).find("foo") != std::string::npos);
    }
    try {
        load_config(write_config(dir, R"({"providers": {"teacher": {"port": 1}}})"));
        FAIL("expected ValidationError");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("providers.teacher.port") != std::string::npos);
    }
    CHECK_THROWS_MATCHES(load_config(write_config(dir, "{not json")), Error,
                         has_code(ErrorCode::parse_error));
    CHECK_THROWS_MATCHES(load_config(write_config(dir, R"({"k_solutions": 0})")), Error,
                         has_code(ErrorCode::validation_error));
}

TEST_CASE("config digest is formatting-invariant but value-sensitive") {
    fs::path dir = fresh_dir("config_digest");
    PipelineConfig a = load_config(write_config(dir, R"({"seed": 5, "mock": true})"));
    PipelineConfig b = load_config(write_config(dir, "{\n  \"mock\": true,\n  \"seed\": 5\n}"));
    CHECK(a.digest() == b.digest());
    PipelineConfig c = load_config(write_config(dir, R"({"seed": 6, "mock": true})"));
    CHECK(a.digest() != c.digest());
}

TEST_CASE("atomic_write_file leaves no partial file under the final name") {
    fs::path dir = fresh_dir("atomic");
    fs::path target = dir / "out.jsonl";
    atomic_write_file(target, "one\n");
    CHECK(read_file(target) == "one\n");
    CHECK_FALSE(file_exists(dir / "out.jsonl.tmp"));

    // a crash between temp write and rename leaves only the temp file
    atomic_write_file(dir / "staged.tmp-probe", "partial");
    CHECK(file_exists(dir / "staged.tmp-probe"));
    CHECK_FALSE(file_exists(dir / "staged"));
}

TEST_CASE("the full mock pipeline satisfies stage-chaining arithmetic") {
    fs::path dir = fresh_dir("chain");
    PipelineConfig config = mock_config(7, 60);
    RunManifest manifest = run_all(config, dir);
    REQUIRE(manifest.all_complete());
    REQUIRE(manifest.stages.size() == 16);

    auto in_of = [&](const char* stage) { return manifest.find(stage)->report->in_count; };
    auto retained_of = [&](const char* stage) {
        return manifest.find(stage)->report->retained_count;
    };
    // main chain
    CHECK(in_of("solutions") == retained_of("questions"));
    CHECK(in_of("consistency") == retained_of("solutions"));
    CHECK(in_of("dedup") == retained_of("consistency"));
    CHECK(in_of("decontam") == retained_of("dedup"));
    CHECK(in_of("difficulty_rate") == retained_of("decontam"));
    CHECK(in_of("difficulty_filter") == retained_of("difficulty_rate"));
    CHECK(in_of("novelty") == retained_of("difficulty_filter"));
    // hike re-entry
    CHECK(in_of("hike") == retained_of("novelty"));
    CHECK(in_of("hike_solutions") == retained_of("hike"));
    CHECK(in_of("hike_novelty") == retained_of("hike_difficulty_filter"));

    // partition invariant per stage
    for (const auto& entry : manifest.stages) {
        const StageReport& r = *entry.report;
        CHECK(r.in_count ==
              r.retained_count + r.removed_count + r.unresolved_count + r.skip_count);
    }

    // per-role provider call accounting
    const auto& q_calls = manifest.find("questions")->report->provider_call_counts;
    REQUIRE(q_calls.count("teacher") == 1);
    CHECK(q_calls.at("teacher") == 60);
    CHECK(q_calls.count("judge") == 0);
    const auto& rate_calls = manifest.find("difficulty_rate")->report->provider_call_counts;
    REQUIRE(rate_calls.count("judge") == 1);
    CHECK(rate_calls.at("judge") >= 3 * in_of("difficulty_rate"));
    const auto& novelty_calls = manifest.find("novelty")->report->provider_call_counts;
    CHECK(novelty_calls.at("search") == in_of("novelty"));
    const auto& filter_calls = manifest.find("difficulty_filter")->report->provider_call_counts;
    CHECK(filter_calls.at("solver") == in_of("difficulty_filter"));

    // every record in every stage file has a valid, ordered history
    for (const auto& entry : manifest.stages) {
        for (const auto& record : read_records(dir / entry.output_file)) {
            INFO(entry.stage << " " << record.id);
            CHECK(validate_stage_history(record.stage_history));
        }
    }

    // final dataset = novelty survivors + hike survivors, non-decreasing
    auto finals = read_dataset_export(dir / "final.jsonl");
    CHECK(finals.size() == retained_of("novelty") + retained_of("hike_novelty"));
    CHECK(finals.size() >= retained_of("novelty"));
    size_t hiked = 0;
    for (const auto& e : finals) {
        if (e.origin == "hiked") {
            ++hiked;
            CHECK(e.lineage.has_value());
        }
    }
    CHECK(hiked == retained_of("hike_novelty"));
}

TEST_CASE("rerunning a complete stage without force is a verified no-op") {
    fs::path dir = fresh_dir("noop");
    PipelineConfig config = mock_config(3, 20);
    run_all(config, dir);
    fs::path dedup_file = dir / "04_dedup.jsonl";
    auto mtime_before = fs::last_write_time(dedup_file);
    StageReport report = run_single_stage(config, dir, "dedup", false);
    CHECK(fs::last_write_time(dedup_file) == mtime_before);
    CHECK(report.stage == "dedup");

    // corrupting the output makes the digest check fail
    atomic_write_file(dedup_file, "tampered\n");
    CHECK_THROWS_MATCHES(run_single_stage(config, dir, "dedup", false), Error,
                         has_code(ErrorCode::validation_error));
}

TEST_CASE("out-of-order stage invocation reports PriorStageIncomplete") {
    fs::path dir = fresh_dir("order");
    PipelineConfig config = mock_config(3, 10);
    CHECK_THROWS_MATCHES(run_single_stage(config, dir, "dedup", false), Error,
                         has_code(ErrorCode::prior_stage_incomplete));
}

TEST_CASE("run-stage consistency on a prepared 10-record fixture") {
    fs::path dir = fresh_dir("fixture10");
    PipelineConfig config = mock_config(5, 10);

    std::vector<ProblemRecord> records;
    for (int i = 0; i < 8; ++i) {
        records.push_back(solved_record("unanimous question " + std::to_string(i), "7", "7"));
    }
    records.push_back(solved_record("split question a", "7", "8"));
    records.push_back(solved_record("split question b", "1", "2"));

    RunManifest manifest;
    manifest.config_snapshot = config.snapshot();
    manifest.config_digest = config.digest();
    manifest.run_id = "run-fixture";
    for (const auto& def : plan_stages(true)) {
        StageEntry entry;
        entry.stage = def.name;
        entry.output_file = stage_file_name(def);
        manifest.stages.push_back(entry);
    }
    std::vector<ProblemRecord> bare;
    for (auto r : records) {
        r.traces.clear();
        r.stage_history.resize(1);
        bare.push_back(std::move(r));
    }
    write_records(dir / "01_questions.jsonl", bare);
    write_records(dir / "02_solutions.jsonl", records);
    for (const char* done : {"questions", "solutions"}) {
        StageEntry* entry = manifest.find(done);
        entry->status = StageStatus::complete;
        entry->output_digest = sha256_hex(read_file(dir / entry->output_file));
    }
    write_manifest(dir, manifest);

    StageReport report = run_single_stage(config, dir, "consistency", false);
    CHECK(report.in_count == 10);
    CHECK(report.retained_count == 8);
    CHECK(report.removed_count == 2);
}

TEST_CASE("resume: no-op when complete, continues when interrupted, locks on drift") {
    fs::path dir = fresh_dir("resume");
    PipelineConfig config = mock_config(11, 30);

    RunOptions stop;
    stop.stop_after = "dedup";
    run_all(config, dir, stop);
    RunManifest partial = read_manifest(dir);
    CHECK(partial.find("dedup")->status == StageStatus::complete);
    CHECK(partial.find("decontam")->status == StageStatus::pending);
    CHECK_FALSE(file_exists(dir / "final.jsonl"));

    // stages 1-4 keep their bytes across the resume
    auto digest_before = partial.find("consistency")->output_digest;
    RunManifest resumed = resume(config, dir);
    CHECK(resumed.all_complete());
    CHECK(resumed.find("consistency")->output_digest == digest_before);
    CHECK(file_exists(dir / "final.jsonl"));

    // resume of a complete run does no work
    RunManifest again = resume(config, dir);
    CHECK(again.all_complete());

    // edited config refuses to resume
    PipelineConfig drifted = mock_config(12, 30);
    CHECK_THROWS_MATCHES(resume(drifted, dir), Error, has_code(ErrorCode::config_drift));

    // --force-new starts over under the new config
    RunManifest fresh = resume(drifted, dir, true);
    CHECK(fresh.config_digest == drifted.digest());
    CHECK(fresh.all_complete());
}

TEST_CASE("run directory lock excludes a second engine") {
    fs::path dir = fresh_dir("lock");
    PipelineConfig config = mock_config(1, 5);
    RunOptions options;
    PipelineEngine first(config, dir, options);
    CHECK_THROWS_MATCHES(PipelineEngine(config, dir, options), Error,
                         has_code(ErrorCode::run_locked));
}

TEST_CASE("resume without a manifest is an error") {
    fs::path dir = fresh_dir("resume_empty");
    PipelineConfig config = mock_config(1, 5);
    CHECK_THROWS_MATCHES(resume(config, dir), Error, has_code(ErrorCode::validation_error));
}

TEST_CASE("end-to-end determinism: byte-identical final exports") {
    PipelineConfig config = mock_config(21, 40);
    fs::path dir1 = fresh_dir("det1");
    fs::path dir2 = fresh_dir("det2");
    run_all(config, dir1);
    run_all(config, dir2);
    CHECK(read_file(dir1 / "final.jsonl") == read_file(dir2 / "final.jsonl"));
    for (const auto& entry : read_manifest(dir1).stages) {
        INFO(entry.stage);
        CHECK(read_file(dir1 / entry.output_file) == read_file(dir2 / entry.output_file));
    }
}

TEST_CASE("--skip-hike plans no hike stages") {
    fs::path dir = fresh_dir("skiphike");
    PipelineConfig config = mock_config(2, 15);
    RunOptions options;
    options.include_hike = false;
    RunManifest manifest = run_all(config, dir, options);
    CHECK(manifest.stages.size() == 8);
    CHECK(manifest.find("hike") == nullptr);
    CHECK(manifest.all_complete());
    // final file = novelty output only
    auto finals = read_dataset_export(dir / "final.jsonl");
    CHECK(finals.size() == manifest.find("novelty")->report->retained_count);
}

TEST_CASE("yield report reproduces the reference stage-count chain") {
    RunManifest manifest;
    manifest.run_id = "run-fixture";
    manifest.config_digest = "0";
    auto add = [&](const std::string& stage, std::uint64_t in, std::uint64_t retained) {
        StageEntry entry;
        entry.stage = stage;
        entry.output_file = stage + ".jsonl";
        entry.status = StageStatus::complete;
        StageReport report;
        report.stage = stage;
        report.in_count = in;
        report.retained_count = retained;
        report.removed_count = in - retained;
        report.finalize_rate();
        entry.report = report;
        manifest.stages.push_back(entry);
    };
    add("consistency", 23437, 17578);
    add("dedup", 17578, 16285);
    add("decontam", 16285, 16281);
    add("difficulty_rate", 16281, 16281);
    add("difficulty_filter", 16281, 9211);
    add("novelty", 9211, 8842);

    YieldReport report = compute_yield_report(manifest);
    REQUIRE(report.stages.size() == 6);
    CHECK(report.stages[1].removed_count == 1293);
    CHECK(report.stages[2].removed_count == 4);
    CHECK(report.stages[2].retained_count == 17578 - 1293 - 4);
    CHECK(*report.stages[4].retention_rate == Catch::Approx(0.5658).margin(0.0001));
    CHECK(*report.stages[5].retention_rate == Catch::Approx(0.9599).margin(0.0005));

    double product = 1.0;
    for (const auto& s : report.stages) product *= *s.retention_rate;
    REQUIRE(report.cumulative_main.has_value());
    CHECK(std::abs(*report.cumulative_main - product) < 1e-12);
    CHECK(*report.cumulative_main == Catch::Approx(8842.0 / 23437.0).margin(1e-9));
}

TEST_CASE("yield report handles zero-in-count stages without division") {
    RunManifest manifest;
    manifest.run_id = "r";
    manifest.config_digest = "0";
    StageEntry entry;
    entry.stage = "novelty";
    entry.output_file = "x.jsonl";
    entry.status = StageStatus::complete;
    StageReport report;
    report.stage = "novelty";
    report.in_count = 0;
    report.finalize_rate();
    entry.report = report;
    manifest.stages.push_back(entry);
    YieldReport yield = compute_yield_report(manifest);
    CHECK_FALSE(yield.stages[0].retention_rate.has_value());
    CHECK_FALSE(yield.cumulative_main.has_value());
}

TEST_CASE("yield report computes histogram and hike shift from stage files") {
    fs::path dir = fresh_dir("report_files");
    PipelineConfig config = mock_config(17, 50);
    RunManifest manifest = run_all(config, dir);
    YieldReport report = compute_yield_report(manifest, dir);
    REQUIRE(!report.histogram.empty());
    std::uint64_t total = 0;
    for (const auto& bin : report.histogram) total += bin.count;
    CHECK(total == manifest.find("difficulty_rate")->report->retained_count +
                       manifest.find("hike_difficulty_rate")->report->retained_count);
    REQUIRE(report.hike_shift.has_value());
    CHECK(report.hike_shift->before_count == manifest.find("novelty")->report->retained_count);
    CHECK(report.hike_shift->after_count ==
          manifest.find("hike_difficulty_rate")->report->retained_count);
}

TEST_CASE("export: dataset round-trip and instruct shape") {
    fs::path dir = fresh_dir("export");
    PipelineConfig config = mock_config(19, 30);
    run_all(config, dir);

    fs::path dataset = export_dataset(dir, ExportFormat::dataset);
    auto exported = read_dataset_export(dataset);
    REQUIRE(!exported.empty());
    for (size_t i = 1; i < exported.size(); ++i) CHECK(exported[i - 1].id < exported[i].id);
    for (const auto& e : exported) {
        CHECK(!e.question.empty());
        CHECK(!e.solution.empty());
        CHECK(!e.answer.empty());
        CHECK(e.difficulty_mean >= 1.0);
        CHECK(e.difficulty_mean <= 10.0);
    }
    // re-export produces identical bytes (round-trip through records)
    fs::path dataset2 = export_dataset(dir, ExportFormat::dataset, dir / "again.jsonl");
    CHECK(read_file(dataset) == read_file(dataset2));
    // the run's own final.jsonl is the same dataset shape
    CHECK(read_file(dataset) == read_file(dir / "final.jsonl"));

    fs::path instruct = export_dataset(dir, ExportFormat::instruct);
    auto lines = read_lines(instruct);
    REQUIRE(lines.size() == exported.size());
    auto first = json::parse(lines[0]);
    CHECK(first.contains("instruction"));
    CHECK(first.contains("output"));
    CHECK(first["instruction"].get<std::string>() == exported[0].question);

    // incomplete runs refuse to export
    fs::path partial_dir = fresh_dir("export_partial");
    RunOptions stop;
    stop.stop_after = "dedup";
    run_all(config, partial_dir, stop);
    CHECK_THROWS_MATCHES(export_dataset(partial_dir, ExportFormat::dataset), Error,
                         has_code(ErrorCode::incomplete_run));
}

TEST_CASE("stage ops are idempotent on their own output") {
    fs::path dir = fresh_dir("idempotent");
    PipelineConfig config = mock_config(23, 40);
    RunManifest manifest = run_all(config, dir);

    auto consistency_out = read_records(dir / manifest.find("consistency")->output_file);
    ConsistencyResult again = self_consistency_filter(consistency_out, derive_seed(23, "consistency"));
    CHECK(again.retained.size() == consistency_out.size());
    CHECK(again.removed.empty());

    MockEmbeddingProvider embedder(23);
    auto dedup_out = read_records(dir / manifest.find("dedup")->output_file);
    DedupOptions options;
    options.threshold = config.dedup_threshold;
    DedupResult swept = dedup(dedup_out, embedder, options);
    CHECK(swept.removed.empty());

    MockSearchProvider search(23);
    auto novelty_out = read_records(dir / manifest.find("novelty")->output_file);
    for (const auto& r : novelty_out) {
        NoveltyOutcome outcome =
            novelty_filter(r, search, embedder, {config.novelty_tau, config.novelty_k});
        CHECK(outcome.keep);
    }
}

TEST_CASE("benchmark files: plain text and jsonl, relative to the config dir") {
    fs::path dir = fresh_dir("benchmarks");
    atomic_write_file(dir / "bench.txt", "Question one?\n\nQuestion two?\n");
    atomic_write_file(dir / "bench.jsonl",
                      "{\"question\": \"Json question A\"}\n{\"question\": \"Json question B\"}\n");

    auto txt = load_benchmark_file("amc", dir / "bench.txt");
    REQUIRE(txt.size() == 2);
    CHECK(txt[0].benchmark == "amc");
    CHECK(txt[0].question == "Question one?");
    auto jsonl = load_benchmark_file("aime", dir / "bench.jsonl");
    REQUIRE(jsonl.size() == 2);
    CHECK(jsonl[1].question == "Json question B");

    CHECK_THROWS_MATCHES(load_benchmark_file("x", dir / "bench_missing.txt"), Error,
                         has_code(ErrorCode::io_error));
    atomic_write_file(dir / "bad.jsonl", "{\"no_question\": 1}\n");
    CHECK_THROWS_MATCHES(load_benchmark_file("x", dir / "bad.jsonl"), Error,
                         has_code(ErrorCode::parse_error));

    // config-driven loading resolves paths against the base dir and the
    // decontam stage indexes against the configured sets
    nlohmann::json doc = {{"mock", true},
                          {"seed", 4},
                          {"limits", {{"max_records", 15}, {"max_concurrent", 2}}},
                          {"benchmarks", nlohmann::json::array(
                                             {{{"name", "amc"}, {"path", "bench.txt"}},
                                              {{"name", "aime"}, {"path", "bench.jsonl"}}})}};
    PipelineConfig config = parse_config(doc);
    auto items = load_benchmarks(config, dir);
    CHECK(items.size() == 4);
    RunOptions options;
    options.base_dir = dir;
    options.include_hike = false;
    RunManifest manifest = run_all(config, dir / "run", options);
    CHECK(manifest.all_complete());
    CHECK(manifest.find("decontam")->report->provider_call_counts.count("judge") == 1);
}

TEST_CASE("a user-supplied taxonomy drives generation and hiking") {
    fs::path dir = fresh_dir("taxonomy");
    nlohmann::json tax = {
        {"branches",
         {{"Knots", nlohmann::json::array({{{"name", "Basics"},
                                            {"tools_concepts", {"Reidemeister moves"}},
                                            {"theorems", {"Alexander's Theorem"}}}})},
          {"Tilings", nlohmann::json::array({{{"name", "Planar"},
                                              {"tools_concepts", {"Wang tiles"}},
                                              {"theorems", {"Extension Theorem"}}}})}}}};
    atomic_write_file(dir / "tax.json", tax.dump(2));

    Taxonomy loaded = load_taxonomy_file(dir / "tax.json");
    CHECK(loaded.branches.size() == 2);
    CHECK(loaded.branch_theorems("Knots") == std::vector<std::string>{"Alexander's Theorem"});

    nlohmann::json doc = {{"mock", true},
                          {"seed", 2},
                          {"taxonomy_path", "tax.json"},
                          {"limits", {{"max_records", 12}, {"max_concurrent", 2}}}};
    PipelineConfig config = parse_config(doc);
    RunOptions options;
    options.base_dir = dir;
    RunManifest manifest = run_all(config, dir / "run", options);
    CHECK(manifest.all_complete());
    for (const auto& r : read_records(dir / "run" / "01_questions.jsonl")) {
        CHECK((r.primary_branch == "Knots" || r.primary_branch == "Tilings"));
        CHECK(r.primary_branch != r.secondary_branch);
    }
    for (const auto& r : read_records(dir / "run" / "09_hike.jsonl")) {
        REQUIRE(r.hike_meta.has_value());
        CHECK(r.hike_meta->central_theorem ==
              (r.primary_branch == "Knots" ? "Alexander's Theorem" : "Extension Theorem"));
    }

    // validation: a branch without theorems is rejected up front
    nlohmann::json bad = {{"branches",
                           {{"Empty", nlohmann::json::array({{{"name", "T"},
                                                              {"tools_concepts", {"tool"}},
                                                              {"theorems",
                                                               nlohmann::json::array()}}})}}}};
    atomic_write_file(dir / "bad.json", bad.dump());
    CHECK_THROWS_MATCHES(load_taxonomy_file(dir / "bad.json"), Error,
                         has_code(ErrorCode::validation_error));
}

TEST_CASE("a dead teacher endpoint aborts the questions stage resumably") {
    fs::path dir = fresh_dir("dead_endpoint");
    nlohmann::json provider = {{"endpoint_url", "http://127.0.0.1:9/v1"},
                               {"model", "m"},
                               {"timeout_ms", 200},
                               {"max_retries", 0},
                               {"backoff_base_ms", 1},
                               {"max_concurrent", 2}};
    nlohmann::json doc = {{"seed", 1},
                          {"limits", {{"max_records", 3}, {"max_concurrent", 2}}},
                          {"providers",
                           {{"teacher", provider},
                            {"judge", provider},
                            {"solver", provider},
                            {"embedder", provider},
                            {"search", provider}}}};
    PipelineConfig config = parse_config(doc);
    CHECK_THROWS_MATCHES(run_all(config, dir), Error, has_code(ErrorCode::timeout));
    RunManifest manifest = read_manifest(dir);
    CHECK(manifest.find("questions")->status != StageStatus::complete);
}

TEST_CASE("cli: run-all, report, export, and exit codes") {
    fs::path dir = fresh_dir("cli");
    fs::path config_path = write_config(
        dir, R"({"mock": true, "seed": 9, "limits": {"max_records": 12, "max_concurrent": 2}})");
    fs::path run_dir = dir / "run";
    std::string cli = SANDPIPE_CLI_PATH;
    auto run = [&](const std::string& args) {
        std::string cmd = cli + " " + args + " > " + (dir / "out.txt").string() + " 2>&1";
        int status = std::system(cmd.c_str());
        return WEXITSTATUS(status);
    };

    CHECK(run("run-all --config " + config_path.string() + " --run-dir " + run_dir.string() +
              " --skip-hike") == 0);
    CHECK(read_manifest(run_dir).find("hike") == nullptr);
    CHECK(run("report --config " + config_path.string() + " --run-dir " + run_dir.string()) == 0);
    CHECK(run("export --run-dir " + run_dir.string() + " --format instruct") == 0);
    CHECK(file_exists(run_dir / "export_instruct.jsonl"));
    CHECK(run("resume --config " + config_path.string() + " --run-dir " + run_dir.string()) == 0);

    // validation failure -> exit 2
    fs::path bad_config = write_config(dir, R"({"unknown_key": 1})", "bad.json");
    CHECK(run("run-all --config " + bad_config.string() + " --run-dir " + run_dir.string()) == 2);

    // config drift on resume -> exit 4
    fs::path drifted = dir / "drifted.json";
    atomic_write_file(drifted, R"({"mock": true, "seed": 10, "limits": {"max_records": 12}})");
    CHECK(run("resume --config " + drifted.string() + " --run-dir " + run_dir.string()) == 4);

    // unseeded limit override changes the digest, too
    CHECK(run("resume --config " + config_path.string() + " --run-dir " + run_dir.string() +
              " --limit 99") == 4);

    // run-stage: rerun complete stage (no-op), then forced
    CHECK(run("run-stage consistency --config " + config_path.string() + " --run-dir " +
              run_dir.string()) == 0);
    CHECK(run("run-stage consistency --force --config " + config_path.string() + " --run-dir " +
              run_dir.string()) == 0);
    CHECK(run("run-stage nonsense --config " + config_path.string() + " --run-dir " +
              run_dir.string()) == 2);

    // SANDPIPE_RUN_DIR supplies the default run directory
    std::string env_cmd = "SANDPIPE_RUN_DIR=" + run_dir.string() + " " + cli +
                          " report > /dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(env_cmd.c_str())) == 0);
}

TEST_CASE("cli: a SIGKILLed run resumes to the same final bytes") {
    fs::path dir = fresh_dir("cli_kill");
    fs::path config_path = write_config(
        dir, R"({"mock": true, "seed": 13, "limits": {"max_records": 400, "max_concurrent": 4}})");
    std::string cli = SANDPIPE_CLI_PATH;

    // reference: uninterrupted run
    fs::path ref_dir = dir / "ref";
    std::string ref_cmd = cli + " run-all --config " + config_path.string() + " --run-dir " +
                          ref_dir.string() + " > /dev/null 2>&1";
    REQUIRE(WEXITSTATUS(std::system(ref_cmd.c_str())) == 0);

    // killed run: SIGKILL lands mid-pipeline (or after completion on a very
    // fast machine; either way the resume path must converge)
    fs::path kill_dir = dir / "killed";
    std::string kill_cmd = "timeout -s KILL 0.15s " + cli + " run-all --config " +
                           config_path.string() + " --run-dir " + kill_dir.string() +
                           " > /dev/null 2>&1";
    std::system(kill_cmd.c_str());

    std::string resume_cmd = cli + " resume --config " + config_path.string() + " --run-dir " +
                             kill_dir.string() + " > /dev/null 2>&1";
    int resume_exit = WEXITSTATUS(std::system(resume_cmd.c_str()));
    if (resume_exit != 0) {
        // the kill landed before the manifest existed; a fresh run is the
        // legitimate recovery
        std::string rerun_cmd = cli + " run-all --config " + config_path.string() + " --run-dir " +
                                kill_dir.string() + " > /dev/null 2>&1";
        REQUIRE(WEXITSTATUS(std::system(rerun_cmd.c_str())) == 0);
    }
    CHECK(read_file(kill_dir / "final.jsonl") == read_file(ref_dir / "final.jsonl"));
}
