#pragma once
// Adversarial parser corpus shared by the unit tests and the acceptance
// suite: hand-written edge cases plus generated well-formed inputs whose
// expected outputs are known by construction.

#include <string>
#include <vector>

#include "sandpipe/core/answers.hpp"
#include "sandpipe/filtering/difficulty.hpp"
#include "sandpipe/generation/tags.hpp"
#include "sandpipe/util/rng.hpp"

namespace corpus {

using sandpipe::ErrorCode;

enum class Parser { boxed, qs, difficulty };

struct ParserCase {
    Parser parser;
    std::string input;
    bool ok = true;
    std::string expect_a;  // boxed: answer; qs: question; difficulty: summary
    std::string expect_b;  // qs: solution; difficulty: rationale
    double expect_score = 0.0;
    ErrorCode code = ErrorCode::no_boxed_answer;
};

inline ParserCase boxed_ok(std::string input, std::string answer) {
    ParserCase c;
    c.parser = Parser::boxed;
    c.input = std::move(input);
    c.expect_a = std::move(answer);
    return c;
}

inline ParserCase boxed_err(std::string input, ErrorCode code) {
    ParserCase c;
    c.parser = Parser::boxed;
    c.input = std::move(input);
    c.ok = false;
    c.code = code;
    return c;
}

inline ParserCase qs_ok(std::string input, std::string q, std::string s) {
    ParserCase c;
    c.parser = Parser::qs;
    c.input = std::move(input);
    c.expect_a = std::move(q);
    c.expect_b = std::move(s);
    return c;
}

inline ParserCase qs_err(std::string input, ErrorCode code) {
    ParserCase c;
    c.parser = Parser::qs;
    c.input = std::move(input);
    c.ok = false;
    c.code = code;
    return c;
}

inline ParserCase diff_ok(std::string input, std::string summary, double score,
                          std::string rationale) {
    ParserCase c;
    c.parser = Parser::difficulty;
    c.input = std::move(input);
    c.expect_a = std::move(summary);
    c.expect_b = std::move(rationale);
    c.expect_score = score;
    return c;
}

inline ParserCase diff_err(std::string input, ErrorCode code) {
    ParserCase c;
    c.parser = Parser::difficulty;
    c.input = std::move(input);
    c.ok = false;
    c.code = code;
    return c;
}

// Random brace-balanced payload with no backslashes and no tag markers, so
// wrapping it is a round-trip identity for both parsers.
inline std::string random_balanced_payload(sandpipe::Rng& rng) {
    static const char* kAtoms[] = {"x", "42", "f(n)", "a+b", " ", "^", "=", "7k", "pi", "sum"};
    std::string out;
    int depth = 0;
    size_t len = 3 + rng.uniform(14);
    for (size_t i = 0; i < len; ++i) {
        switch (rng.uniform(4)) {
            case 0:
                out += "{";
                ++depth;
                break;
            case 1:
                if (depth > 0) {
                    out += "}";
                    --depth;
                } else {
                    out += kAtoms[rng.uniform(10)];
                }
                break;
            default:
                out += kAtoms[rng.uniform(10)];
        }
    }
    while (depth-- > 0) out += "}";
    return out;
}

inline std::vector<ParserCase> parser_corpus() {
    std::vector<ParserCase> cases;

    // --- boxed extraction, hand-written
    cases.push_back(boxed_ok("so the result is \\boxed{42}.", "42"));
    cases.push_back(boxed_ok("\\boxed{\\frac{1}{2}}", "\\frac{1}{2}"));
    cases.push_back(boxed_ok("first \\boxed{7} then \\boxed{9}", "9"));
    cases.push_back(boxed_ok("\\boxed{42}", "42"));
    cases.push_back(boxed_ok("\\boxed{{nested}}", "{nested}"));
    cases.push_back(boxed_ok("\\boxed{a{b{c}d}e}", "a{b{c}d}e"));
    cases.push_back(boxed_ok("x \\boxed{1} y \\boxed{2} z \\boxed{3}", "3"));
    cases.push_back(boxed_ok("\\boxed{}", ""));
    cases.push_back(boxed_ok("\\boxed{ 42 }", " 42 "));
    cases.push_back(boxed_ok("\\boxed{7} trailing \\boxed{unclosed", "7"));
    cases.push_back(boxed_ok("\\boxed{\\{literal\\}}", "\\{literal\\}"));
    cases.push_back(boxed_ok("text \\boxed{-14} end", "-14"));
    cases.push_back(boxed_ok("\\boxed{x^{2}+1}", "x^{2}+1"));
    cases.push_back(boxed_ok("answer \\boxed{0}", "0"));
    cases.push_back(boxed_ok("pre \\boxed{\\text{yes}} post", "\\text{yes}"));
    cases.push_back(boxed_ok("line1\n\\boxed{99}\nline2", "99"));
    cases.push_back(boxed_ok("\\boxed{a}\\boxed{b}", "b"));
    cases.push_back(boxed_ok("deep \\boxed{\\frac{\\sqrt{2}}{2}}", "\\frac{\\sqrt{2}}{2}"));
    cases.push_back(boxed_err("no answer here", ErrorCode::no_boxed_answer));
    cases.push_back(boxed_err("", ErrorCode::no_boxed_answer));
    cases.push_back(boxed_err("boxed{42}", ErrorCode::no_boxed_answer));
    cases.push_back(boxed_err("\\boxed{42", ErrorCode::unbalanced_braces));
    cases.push_back(boxed_err("\\boxed{\\frac{1}{2}", ErrorCode::unbalanced_braces));
    cases.push_back(boxed_err("\\boxed{{}", ErrorCode::unbalanced_braces));
    cases.push_back(boxed_err("\\boxed{", ErrorCode::unbalanced_braces));
    cases.push_back(boxed_err("only \\boxed{a{b}", ErrorCode::unbalanced_braces));

    // --- <Q>/<S> parsing, hand-written
    cases.push_back(qs_ok("<Q>find x</Q><S>x=1 \\boxed{1}</S>", "find x", "x=1 \\boxed{1}"));
    cases.push_back(
        qs_ok("preamble...<Q>a</Q> noise <S>b</S> trailer", "a", "b"));
    cases.push_back(qs_ok("<Q>  padded  </Q><S>s</S>", "padded", "s"));
    cases.push_back(qs_ok("<Q>a</Q><S>b</S><Q>c</Q><S>d</S>", "a", "b"));
    cases.push_back(qs_ok("<S>b</S><Q>a</Q>", "a", "b"));
    cases.push_back(qs_ok("<Q>multi\nline</Q><S>s</S>", "multi\nline", "s"));
    cases.push_back(qs_ok("<Q>a</Q>\n<S>b with <D>4</D> inside</S>", "a", "b with <D>4</D> inside"));
    cases.push_back(qs_err("<Q>a</Q>", ErrorCode::missing_s_tag));
    cases.push_back(qs_err("<S>b</S>", ErrorCode::missing_q_tag));
    cases.push_back(qs_err("", ErrorCode::missing_q_tag));
    cases.push_back(qs_err("plain text only", ErrorCode::missing_q_tag));
    cases.push_back(qs_err("<Q>a", ErrorCode::missing_q_tag));
    cases.push_back(qs_err("<Q>a</Q><S>b", ErrorCode::missing_s_tag));
    cases.push_back(qs_err("<Q>a<Q>b</Q></Q><S>s</S>", ErrorCode::nested_tags));
    cases.push_back(qs_err("<Q>a</Q><S>b<S>c</S></S>", ErrorCode::nested_tags));
    cases.push_back(qs_err("<q>a</q><s>b</s>", ErrorCode::missing_q_tag));

    // --- difficulty responses, hand-written
    cases.push_back(diff_ok("<S>s</S><D>4.5</D><R>r</R>", "s", 4.5, "r"));
    cases.push_back(diff_ok("<S>s</S>\n<D>7</D>\n<R>r</R>", "s", 7.0, "r"));
    cases.push_back(diff_ok("<D>1.0</D><S>s</S><R>r</R>", "s", 1.0, "r"));
    cases.push_back(diff_ok("<S>s</S><D> 4.5 </D><R>r</R>", "s", 4.5, "r"));
    cases.push_back(diff_ok("<S>s</S><D>10.0</D><R>r</R>", "s", 10.0, "r"));
    cases.push_back(diff_ok("<S>s</S><D>1</D><R>r</R>", "s", 1.0, "r"));
    cases.push_back(diff_ok("chatter <S>sum</S> mid <D>6.5</D> tail <R>why</R> end", "sum", 6.5,
                            "why"));
    cases.push_back(diff_ok("<S>s</S><D>4.5</D><D>9.0</D><R>r</R>", "s", 4.5, "r"));
    cases.push_back(diff_err("<D>11</D><S>s</S><R>r</R>", ErrorCode::score_out_of_range));
    cases.push_back(diff_err("<S>s</S><D>0.5</D><R>r</R>", ErrorCode::score_out_of_range));
    cases.push_back(diff_err("<S>s</S><D>-3</D><R>r</R>", ErrorCode::score_out_of_range));
    cases.push_back(diff_err("<S>s</S><D>10.5</D><R>r</R>", ErrorCode::score_out_of_range));
    cases.push_back(diff_err("<S>s</S><D>4.3</D><R>r</R>", ErrorCode::score_not_half_step));
    cases.push_back(diff_err("<S>s</S><D>6.75</D><R>r</R>", ErrorCode::score_not_half_step));
    cases.push_back(diff_err("<S>s</S><R>r</R>", ErrorCode::missing_tag));
    cases.push_back(diff_err("<D>4.5</D><R>r</R>", ErrorCode::missing_tag));
    cases.push_back(diff_err("<S>s</S><D>4.5</D>", ErrorCode::missing_tag));
    cases.push_back(diff_err("no tags at all", ErrorCode::missing_tag));
    cases.push_back(diff_err("<S>s</S><D>abc</D><R>r</R>", ErrorCode::invalid_score));
    cases.push_back(diff_err("<S>s</S><D></D><R>r</R>", ErrorCode::invalid_score));
    cases.push_back(diff_err("<S>s</S><D>4.5x</D><R>r</R>", ErrorCode::invalid_score));
    cases.push_back(diff_err("<S>s</S><D>4.5<D>5</D></D><R>r</R>", ErrorCode::nested_tags));

    // --- generated round-trip cases (well-formed by construction)
    sandpipe::Rng rng(20250809);
    for (int i = 0; i < 24; ++i) {
        std::string payload = random_balanced_payload(rng);
        cases.push_back(boxed_ok("noise \\boxed{" + payload + "} tail", payload));
    }
    for (int i = 0; i < 16; ++i) {
        std::string q = sandpipe::trim(random_balanced_payload(rng));
        std::string s = sandpipe::trim(random_balanced_payload(rng));
        cases.push_back(qs_ok("think... <Q>" + q + "</Q> mid <S>" + s + "</S> done", q, s));
    }
    for (int i = 0; i < 12; ++i) {
        double score = 1.0 + 0.5 * static_cast<double>(rng.uniform(19));
        std::string text = sandpipe::format_fixed(score, 1);
        cases.push_back(diff_ok("<S>gen</S><D>" + text + "</D><R>gen</R>", "gen", score, "gen"));
    }
    return cases;
}

// Runs one case; returns empty string on pass, a description on failure.
inline std::string check_parser_case(const ParserCase& c) {
    using namespace sandpipe;
    try {
        switch (c.parser) {
            case Parser::boxed: {
                std::string got = extract_boxed_answer(c.input);
                if (!c.ok) return "expected error, got '" + got + "'";
                if (got != c.expect_a) return "expected '" + c.expect_a + "', got '" + got + "'";
                return {};
            }
            case Parser::qs: {
                QuestionSolution got = parse_qs_tags(c.input);
                if (!c.ok) return "expected error, got spans";
                if (got.question != c.expect_a || got.solution != c.expect_b) {
                    return "span mismatch: '" + got.question + "' / '" + got.solution + "'";
                }
                return {};
            }
            case Parser::difficulty: {
                DifficultyResponse got = parse_difficulty_response(c.input);
                if (!c.ok) return "expected error, got score";
                if (got.summary != c.expect_a || got.rationale != c.expect_b ||
                    got.score != c.expect_score) {
                    return "difficulty mismatch, score " + std::to_string(got.score);
                }
                return {};
            }
        }
    } catch (const Error& e) {
        if (c.ok) return std::string("unexpected error: ") + e.what();
        if (e.code() != c.code) {
            return "expected " + std::string(to_string(c.code)) + ", got " +
                   std::string(to_string(e.code()));
        }
        return {};
    }
    return "unreachable";
}

}  // namespace corpus
