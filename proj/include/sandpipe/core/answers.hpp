#pragma once
// Final-answer extraction from reasoning traces, and the normalization that
// defines answer equality for the consistency and difficulty filters.
// Equality downstream is string equality after normalize_answer; symbolic
// equivalence is out of scope.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sandpipe/errors.hpp"
#include "sandpipe/util/strings.hpp"

namespace sandpipe {

namespace detail {

// A brace escaped by an odd number of preceding backslashes is literal and
// does not affect nesting depth.
inline bool is_escaped(std::string_view text, size_t pos) {
    size_t backslashes = 0;
    while (pos > 0 && text[pos - 1] == '\\') {
        ++backslashes;
        --pos;
    }
    return backslashes % 2 == 1;
}

// Content between the brace at open_pos and its matching close brace, or
// nullopt when the braces never balance.
inline std::optional<std::string> balanced_brace_content(std::string_view text, size_t open_pos) {
    int depth = 0;
    for (size_t i = open_pos; i < text.size(); ++i) {
        char c = text[i];
        if ((c == '{' || c == '}') && is_escaped(text, i)) continue;
        if (c == '{') {
            ++depth;
        } else if (c == '}') {
            --depth;
            if (depth == 0) return std::string(text.substr(open_pos + 1, i - open_pos - 1));
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Returns the contents of the last balanced `\boxed{...}` in the text.
/// Traces commonly box intermediate values; the final answer is the last one.
inline std::string extract_boxed_answer(std::string_view text) {
    static constexpr std::string_view kMarker = "\\boxed{";
    std::optional<std::string> last;
    bool saw_marker = false;
    size_t search = 0;
    while (true) {
        size_t pos = text.find(kMarker, search);
        if (pos == std::string_view::npos) break;
        saw_marker = true;
        auto content = detail::balanced_brace_content(text, pos + kMarker.size() - 1);
        if (content) last = std::move(content);
        search = pos + kMarker.size();
    }
    if (!saw_marker) throw Error(ErrorCode::no_boxed_answer, "no \\boxed{ marker in text");
    if (!last) throw Error(ErrorCode::unbalanced_braces, "\\boxed{ never closes");
    return *last;
}

namespace detail {

// Strips one enclosing $...$ pair when the outer dollars actually pair with
// each other: the inner text is dollar-free, or is itself dollar-enclosed
// ($$...$$ display math, peeled layer by layer). "$a$ and $b$" stays intact.
inline bool strip_enclosing_dollars(std::string& s) {
    if (s.size() < 2 || s.front() != '$' || s.back() != '$') return false;
    std::string_view inner(s.data() + 1, s.size() - 2);
    bool inner_enclosed = inner.size() >= 2 && inner.front() == '$' && inner.back() == '$';
    if (!inner_enclosed && inner.find('$') != std::string_view::npos) return false;
    s = std::string(inner);
    return true;
}

// Strips \text{...} when it encloses the whole string.
inline bool strip_enclosing_text(std::string& s) {
    static constexpr std::string_view kText = "\\text{";
    if (s.rfind(kText, 0) != 0) return false;
    auto content = balanced_brace_content(s, kText.size() - 1);
    if (!content) return false;
    // The matching close brace must be the final character.
    if (kText.size() + content->size() + 1 != s.size()) return false;
    s = *content;
    return true;
}

// "0,042" / "+42" / "-7" style integers become a canonical digit string.
inline bool canonicalize_integer(std::string& s) {
    if (s.empty()) return false;
    size_t i = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        i = 1;
    }
    if (i >= s.size()) return false;
    std::string digits;
    bool last_was_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            last_was_digit = true;
        } else if (c == ',' && last_was_digit) {
            last_was_digit = false;  // thousands separator, must sit between digits
        } else {
            return false;
        }
    }
    if (digits.empty() || !last_was_digit) return false;
    size_t nz = digits.find_first_not_of('0');
    if (nz == std::string::npos) {
        s = "0";
        return true;
    }
    s = (negative ? "-" : "") + digits.substr(nz);
    return true;
}

}  // namespace detail

/// Canonicalizes a raw answer string. Total and idempotent: wrappers
/// ($...$, \text{...}) are peeled until a fixpoint, whitespace is collapsed,
/// and integer forms lose leading zeros and thousands separators. Anything
/// non-integer is otherwise left verbatim.
inline std::string normalize_answer(std::string_view raw) {
    std::string s = collapse_whitespace(raw);
    // every strip shortens the string, so this reaches a fixpoint
    while (true) {
        bool changed = detail::strip_enclosing_dollars(s);
        changed = detail::strip_enclosing_text(s) || changed;
        if (!changed) break;
        s = collapse_whitespace(s);
    }
    detail::canonicalize_integer(s);
    return s;
}

}  // namespace sandpipe
