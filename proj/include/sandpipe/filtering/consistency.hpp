#pragma once
// Self-consistency filtering: a record survives only when every trace has a
// valid extracted answer and all normalized answers agree. Survivors get one
// randomly chosen canonical trace.

#include <vector>

#include "sandpipe/core/types.hpp"
#include "sandpipe/util/rng.hpp"

namespace sandpipe {

// Verdict is a pure function of the trace answers, so it is invariant under
// trace reordering.
inline bool is_self_consistent(const ProblemRecord& record) {
    if (record.traces.empty()) return false;
    for (const auto& trace : record.traces) {
        if (!trace.valid()) return false;
        if (*trace.answer != *record.traces.front().answer) return false;
    }
    return true;
}

/// Uniform choice over valid traces, deterministic for a given rng state.
inline size_t select_canonical_trace(const ProblemRecord& record, Rng& rng) {
    std::vector<size_t> valid;
    for (size_t i = 0; i < record.traces.size(); ++i) {
        if (record.traces[i].valid()) valid.push_back(i);
    }
    if (valid.empty()) throw Error(ErrorCode::no_valid_trace, record.id);
    return valid[rng.uniform(valid.size())];
}

struct ConsistencyResult {
    std::vector<ProblemRecord> retained;
    std::vector<ProblemRecord> removed;
};

/// Total partition of the input. The per-record canonical pick is seeded from
/// the record id, so the outcome does not depend on input order.
inline ConsistencyResult self_consistency_filter(const std::vector<ProblemRecord>& records,
                                                 std::uint64_t seed) {
    ConsistencyResult result;
    for (const auto& record : records) {
        ProblemRecord out = record;
        if (is_self_consistent(record)) {
            Rng rng(derive_seed(seed, "canonical:" + record.id));
            out.canonical_trace_index = select_canonical_trace(record, rng);
            out.stage_history.push_back(
                {Stage::consistency, Verdict::passed,
                 "answer " + *record.traces.front().answer});
            result.retained.push_back(std::move(out));
        } else {
            out.stage_history.push_back(
                {Stage::consistency, Verdict::removed, "traces disagree or lack answers"});
            result.removed.push_back(std::move(out));
        }
    }
    return result;
}

}  // namespace sandpipe
