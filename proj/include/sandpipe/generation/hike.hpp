#pragma once
// Difficulty hiking: rewrite a rated problem toward a higher target by
// injecting a theorem from its own branch plus a concept from a random
// branch. The rewrite becomes a brand-new record with lineage back to its
// source; sources are never modified, so the dataset can only grow here.

#include <string>

#include "sandpipe/core/ids.hpp"
#include "sandpipe/core/types.hpp"
#include "sandpipe/generation/prompts.hpp"
#include "sandpipe/generation/tags.hpp"
#include "sandpipe/generation/taxonomy.hpp"
#include "sandpipe/providers/interfaces.hpp"
#include "sandpipe/util/rng.hpp"

namespace sandpipe {

/// Samples the four hiking inputs. The central theorem comes from the union
/// of theorem lists across the source branch's topics; the supporting
/// concept comes from the tools/concepts of a uniformly chosen branch
/// (possibly the same one).
inline HikeInputs sample_hike_inputs(const ProblemRecord& record, const Taxonomy& taxonomy,
                                     double target_difficulty, Rng& rng) {
    if (!taxonomy.has_branch(record.primary_branch)) {
        throw Error(ErrorCode::unknown_branch, record.primary_branch);
    }
    auto theorems = taxonomy.branch_theorems(record.primary_branch);
    if (theorems.empty()) {
        throw Error(ErrorCode::empty_theorem_pool, record.primary_branch);
    }
    const ReasoningTrace* canonical = record.canonical_trace();
    if (!canonical || !record.rating) {
        throw Error(ErrorCode::validation_error,
                    "hiking needs a rated record with a canonical trace: " + record.id);
    }

    HikeInputs inputs;
    inputs.original_question = record.question;
    inputs.original_solution = canonical->trace_text;
    inputs.current_difficulty = record.rating->mean_score;
    inputs.theorem_branch = record.primary_branch;
    inputs.central_theorem = theorems[rng.uniform(theorems.size())];
    auto branches = taxonomy.branch_names();
    inputs.concept_branch = branches[rng.uniform(branches.size())];
    auto tools = taxonomy.branch_tools(inputs.concept_branch);
    if (tools.empty()) {
        throw Error(ErrorCode::empty_theorem_pool, inputs.concept_branch);
    }
    inputs.supporting_concept = tools[rng.uniform(tools.size())];
    inputs.target_difficulty = target_difficulty;
    return inputs;
}

struct HikeParams {
    std::string model;
    double temperature = 0.8;
    std::optional<int> max_tokens;
    double target_difficulty = 8.0;
    std::uint64_t seed = 0;
};

/// One rewrite call. Returns the new record; throws on unparseable output
/// (callers record the failure and keep the source untouched).
inline ProblemRecord hike_difficulty(const ProblemRecord& record, const Taxonomy& taxonomy,
                                     ChatProvider& chat, const HikeParams& params) {
    Rng rng(derive_seed(params.seed, "hike-inputs:" + record.id));
    HikeInputs inputs = sample_hike_inputs(record, taxonomy, params.target_difficulty, rng);

    ChatRequest request;
    request.model = params.model;
    request.user_prompt = build_hike_prompt(inputs);
    request.temperature = params.temperature;
    request.n_samples = 1;
    request.max_tokens = params.max_tokens;
    request.seed = derive_seed(params.seed, "hike-chat:" + record.id);
    std::string reply = chat.chat_complete(request).completions.at(0);
    QuestionSolution qs = parse_qs_tags(reply);
    if (qs.question.empty()) throw Error(ErrorCode::missing_q_tag, "empty <Q> span");

    ProblemRecord hiked;
    hiked.question = qs.question;
    hiked.id = record_id(hiked.question);
    hiked.cogen_solution = qs.solution;
    hiked.primary_branch = inputs.theorem_branch;
    hiked.secondary_branch = inputs.concept_branch;
    hiked.origin = Origin::hiked;
    hiked.hike_meta = inputs;
    hiked.lineage = record.id;
    hiked.stage_history.push_back(
        {Stage::hike, Verdict::transformed, "from " + record.id});
    return hiked;
}

}  // namespace sandpipe
