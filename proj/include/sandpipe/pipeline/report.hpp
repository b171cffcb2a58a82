#pragma once
// Yield reporting: per-stage counts and retention, cumulative retention per
// pass, the difficulty histogram of rated records (0.5-wide bins over
// [1,10]), and before/after hiking statistics. Everything is computed from
// the manifest and the stage files; nothing is asserted.

#include <optional>
#include <string>
#include <vector>

#include "sandpipe/pipeline/manifest.hpp"
#include "sandpipe/pipeline/serialization.hpp"

namespace sandpipe {

struct HistogramBin {
    double lo = 0.0;  // [lo, lo+0.5), last bin closed at 10.0
    std::uint64_t count = 0;
};

struct HikeShift {
    double before_mean = 0.0;
    double after_mean = 0.0;
    double before_share_6plus = 0.0;  // fraction rated >= 6.0
    double after_share_6plus = 0.0;
    std::uint64_t before_count = 0;
    std::uint64_t after_count = 0;
};

struct YieldReport {
    std::vector<StageReport> stages;
    std::optional<double> cumulative_main;
    std::optional<double> cumulative_hike;
    std::vector<HistogramBin> histogram;  // empty when no rated records were found
    std::optional<HikeShift> hike_shift;
};

namespace detail {

inline std::optional<double> cumulative_retention(const RunManifest& manifest, bool hike_pass) {
    std::optional<double> product;
    for (const auto& entry : manifest.stages) {
        bool is_hike = entry.stage.rfind("hike", 0) == 0;
        if (is_hike != hike_pass) continue;
        if (!entry.report || !entry.report->retention_rate) continue;
        product = product.value_or(1.0) * *entry.report->retention_rate;
    }
    return product;
}

inline void accumulate_histogram(std::vector<HistogramBin>& bins,
                                 const std::vector<ProblemRecord>& records) {
    for (const auto& r : records) {
        if (!r.rating) continue;
        double score = r.rating->mean_score;
        int bin = static_cast<int>((score - 1.0) / 0.5);
        bin = std::clamp(bin, 0, static_cast<int>(bins.size()) - 1);
        ++bins[static_cast<size_t>(bin)].count;
    }
}

struct RatingStats {
    double mean = 0.0;
    double share_6plus = 0.0;
    std::uint64_t count = 0;
};

inline RatingStats rating_stats(const std::vector<ProblemRecord>& records) {
    RatingStats stats;
    double sum = 0.0;
    std::uint64_t above = 0;
    for (const auto& r : records) {
        if (!r.rating) continue;
        ++stats.count;
        sum += r.rating->mean_score;
        if (r.rating->mean_score >= 6.0) ++above;
    }
    if (stats.count > 0) {
        stats.mean = sum / static_cast<double>(stats.count);
        stats.share_6plus = static_cast<double>(above) / static_cast<double>(stats.count);
    }
    return stats;
}

}  // namespace detail

/// Pure manifest arithmetic plus (when a run directory is given) the rating
/// histogram and hike shift computed from the stage files on disk.
inline YieldReport compute_yield_report(const RunManifest& manifest,
                                        const std::optional<fs::path>& run_dir = std::nullopt) {
    bool any_complete = false;
    YieldReport report;
    for (const auto& entry : manifest.stages) {
        if (entry.status == StageStatus::complete && entry.report) {
            report.stages.push_back(*entry.report);
            any_complete = true;
        }
    }
    if (!any_complete) {
        throw Error(ErrorCode::validation_error, "no complete stage to report on");
    }
    report.cumulative_main = detail::cumulative_retention(manifest, false);
    report.cumulative_hike = detail::cumulative_retention(manifest, true);

    if (!run_dir) return report;

    std::vector<HistogramBin> bins;
    for (double lo = 1.0; lo < 10.0; lo += 0.5) bins.push_back({lo, 0});

    auto read_stage = [&](const std::string& stage) -> std::vector<ProblemRecord> {
        const StageEntry* entry = manifest.find(stage);
        if (!entry || entry->status != StageStatus::complete) return {};
        fs::path path = *run_dir / entry->output_file;
        if (!file_exists(path)) return {};
        return read_records(path);
    };

    auto main_rated = read_stage("difficulty_rate");
    auto hike_rated = read_stage("hike_difficulty_rate");
    detail::accumulate_histogram(bins, main_rated);
    detail::accumulate_histogram(bins, hike_rated);
    bool any_rated = false;
    for (const auto& b : bins) any_rated = any_rated || b.count > 0;
    if (any_rated) report.histogram = std::move(bins);

    const StageEntry* hike_entry = manifest.find("hike");
    if (hike_entry && hike_entry->status == StageStatus::complete) {
        auto before = detail::rating_stats(read_stage("novelty"));
        auto after = detail::rating_stats(hike_rated);
        if (before.count > 0 || after.count > 0) {
            HikeShift shift;
            shift.before_mean = before.mean;
            shift.after_mean = after.mean;
            shift.before_share_6plus = before.share_6plus;
            shift.after_share_6plus = after.share_6plus;
            shift.before_count = before.count;
            shift.after_count = after.count;
            report.hike_shift = shift;
        }
    }
    return report;
}

}  // namespace sandpipe
