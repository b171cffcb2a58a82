#pragma once
// Prompt builders. Each template is a fixed byte string with named
// placeholders; builders substitute placeholders and nothing else, so the
// emitted prompts are pure functions of their inputs and can be pinned by
// golden files.

#include <string>
#include <string_view>

#include "sandpipe/core/types.hpp"
#include "sandpipe/util/strings.hpp"

namespace sandpipe {

namespace prompts {

inline constexpr std::string_view kQuestionTemplate =
    R"(Generate one novel math problem and solution with a difficulty level at National or International Olympiads.

It must have a single non-negative integer as the answer.

The problem should primarily focus on ({primary_math_branch}) and incorporate a clever mix of elements from ({secondary_math_branch}).

Your response should be formatted as follows:
<Q> Problem Statement </Q>
<S> Step-by-step solution, concluding with the final answer enclosed in boxed{}. </S>)";

inline constexpr std::string_view kSolutionTemplate =
    R"(Answer the mathematics question. Think step by step and put your final answer with in boxed{}

question:
{question})";

inline constexpr std::string_view kRatingTemplate =
    R"(# ROLE: Expert Math Problem Difficulty Assessor

# TASK:
Analyze the provided math problem and solution to assign a difficulty score based on the provided reference materials.

# REFERENCE MATERIALS:
<difficulty_reference>
## Difficulty Level Descriptions (1.0 - 10.0 Scale)
{difficulty_level_descriptions}

## Example Problems by Difficulty Level
{example_problems_by_level}
</difficulty_reference>

# INSTRUCTIONS:
1.  **Analyze:** Carefully read the provided `Math Problem` and its `Solution`. Identify the core mathematical concepts, required techniques, and the complexity of the argument. Note any particularly clever steps, non-obvious insights, or reliance on advanced theorems.

2.  **Compare:** Compare the analyzed problem to the `Example Problems by Difficulty Level` and the `Difficulty Level Descriptions` provided in the reference materials. Consider where it fits in terms of typical competition level (AMC 8/10/12, AIME, USA(J)MO, IMO) and the type of thinking required.

3.  **Score:** Assign a difficulty score between **1.0 and 10.0**, using increments of **0.5** (e.g., 3.0, 3.5, 4.0). The score must be consistent with the provided reference scale.

4.  **Summarize:** Write a brief paragraph summarizing the problem's core topic and mathematical area(s). Enclose this summary within `<S>` and `</S>` tags.

5.  **Assign Score:** Place the difficulty score assigned in step 3 within `<D>` and `</D>` tags.

6.  **Justify:** Write a paragraph explaining the reasoning behind the assigned difficulty score, explicitly referencing the comparison made in step 2 (e.g., "This problem involves techniques similar to example 3.5..." or "The required insight aligns with the description for level 6.0..."). Mention aspects of the problem or solution (like multi-step reasoning, specific theorems, type of creativity needed) that justify the score. Enclose this justification within `<R>` and `</R>` tags.

# OUTPUT FORMAT:
<S>[Your brief paragraph summarizing the problem.]</S>
<D>[The assigned score, e.g., 4.5]</D>
<R>[Your paragraph justifying the score based on analysis and comparison to references.]</R>

# INPUT PROBLEM & SOLUTION:

## Math Problem:
{question}

## Solution:
{solution})";

// Compact built-in reference scale. The rubric block is opaque prompt text;
// deployments can swap it without touching any parsing.
inline constexpr std::string_view kDefaultLevelDescriptions =
    R"(1.0-2.0: direct application of one standard technique (AMC 8/10 early problems).
2.5-4.0: two or three familiar steps with light casework (late AMC, early AIME).
4.5-6.0: multi-step arguments needing one non-obvious idea (mid AIME).
6.5-8.0: several interlocking ideas or a disguised classical theorem (late AIME, USA(J)MO, IMO Shortlist entry level).
8.5-10.0: research-flavored synthesis with long, delicate arguments (hard IMO and beyond).)";

inline constexpr std::string_view kDefaultExampleProblems =
    R"(2.0: count lattice points on a segment with small coordinates.
4.5: find a remainder by combining periodicity of powers with a telescoping identity.
6.0: count configurations fixed by a group action where the orbit structure must be derived.
8.0: bound an extremal family via a disguised classical inequality and construct the equality case.)";

inline constexpr std::string_view kDecontamTemplate =
    R"(Determine whether the provided new question is identical to or a paraphrased version of any of the existing questions listed.
If it is identical or paraphrased, respond with **yes** otherwise, respond with **no**.
Please ensure your response is only yes or no, with no additional commentary.

New Question:
{synthetic_question}

Existing Questions:
{list_of_similar_questions})";

inline constexpr std::string_view kHikeTemplate =
    R"(You are an expert math problem crafter specializing in very hard Olympiad level questions. Your task is to transform the original problem provided below into a new problem with a target difficulty of **challenging Olympiad problem** `(IMO Shortlist level)`.

Central Theorem: {central_theorem}
Supporting Concept/Tool: {supporting_concept}

**Transformation Instructions for the New Problem:**

1.  **Deep Synthesis of Concepts:** The solution to the new problem must *critically depend* on the interplay between the original problem's core theme and the newly introduced **Central Theorem**, **Supporting Concept/Tool**. This synthesis should feel natural and integral to the problem.

2.  **Reliance on Olympiad-Level Theorem:** The application of **Central Theorem** must be non-trivial, essential for reaching the solution, and demonstrate a deep understanding of the theorem. A superficial application or alternative simpler methods should not suffice.

3. **Central Theorem must be disguised:** Central Theorem must be cleaverly disguised. Do not use the **Central Theorem** name in the problem.

4.  **Multiple Non-Trivial Intermediate Steps/Lemmas:** Design the problem so its solution requires at least 2-3 distinct, non-obvious intermediate steps. These steps should logically connect the initial problem setup, any necessary lemmas, the application of **Central Theorem**, **Supporting Concept/Tool**, and the derivation of the final answer.

5.  **High Degree of Abstraction or Generalization (If Appropriate):** If appropriate, replace concrete numbers from the original with parameters, or frame the question more generally to enhance the conceptual challenge.

6.  **Clarity and Soundness:** The new problem statement must be clear, unambiguous, and mathematically sound.

7.  **Answer Format:** The problem must be constructed such that it has a **single final integer answer.**

**Output Format:**
Return the text of the new difficult problem enclosed within `<Q>` and `</Q>` tags and new solution enclosed within <S> and </S>.

**Original Problem:**
({original_problem}))";

}  // namespace prompts

/// Question-generation prompt for a sampled branch pair. Substitution happens
/// only at the two placeholders; the rest of the template is byte-identical.
inline std::string build_question_prompt(const std::string& primary_branch,
                                         const std::string& secondary_branch) {
    std::string prompt(prompts::kQuestionTemplate);
    replace_first(prompt, "{primary_math_branch}", primary_branch);
    replace_first(prompt, "{secondary_math_branch}", secondary_branch);
    return prompt;
}

inline std::string build_solution_prompt(const std::string& question) {
    std::string prompt(prompts::kSolutionTemplate);
    replace_first(prompt, "{question}", question);
    return prompt;
}

inline std::string build_rating_prompt(const std::string& question, const std::string& solution) {
    std::string prompt(prompts::kRatingTemplate);
    replace_first(prompt, "{difficulty_level_descriptions}", prompts::kDefaultLevelDescriptions);
    replace_first(prompt, "{example_problems_by_level}", prompts::kDefaultExampleProblems);
    replace_first(prompt, "{question}", question);
    replace_first(prompt, "{solution}", solution);
    return prompt;
}

inline std::string build_decontam_prompt(const std::string& question,
                                         const std::vector<std::string>& neighbor_questions) {
    std::string listing;
    for (size_t i = 0; i < neighbor_questions.size(); ++i) {
        listing += std::to_string(i + 1) + ". " + neighbor_questions[i];
        if (i + 1 < neighbor_questions.size()) listing += "\n";
    }
    std::string prompt(prompts::kDecontamTemplate);
    replace_first(prompt, "{synthetic_question}", question);
    replace_first(prompt, "{list_of_similar_questions}", listing);
    return prompt;
}

inline std::string build_hike_prompt(const HikeInputs& inputs) {
    std::string original = "Question: " + inputs.original_question +
                           "\nSolution: " + inputs.original_solution +
                           "\nCurrent Difficulty: " + format_fixed(inputs.current_difficulty, 1) +
                           "/10.0";
    std::string prompt(prompts::kHikeTemplate);
    replace_first(prompt, "{central_theorem}", inputs.central_theorem);
    replace_first(prompt, "{supporting_concept}", inputs.supporting_concept);
    replace_first(prompt, "{original_problem}", original);
    return prompt;
}

}  // namespace sandpipe
