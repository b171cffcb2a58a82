#pragma once
// Tagged-span parsing for teacher and judge replies. Extraction is tolerant
// of surrounding chain-of-thought text: it takes the first <T>...</T> span
// and ignores anything after it. A reopened tag inside an unclosed span is
// an error, never a guess.

#include <optional>
#include <string>
#include <string_view>

#include "sandpipe/errors.hpp"
#include "sandpipe/util/strings.hpp"

namespace sandpipe {

namespace detail {

// Trimmed content of the first complete <tag>...</tag> span. Returns nullopt
// when the tag never opens or never closes (the span is missing either way);
// throws nested_tags when the tag reopens before it closes.
inline std::optional<std::string> first_tag_span(std::string_view text, std::string_view tag) {
    std::string open = "<" + std::string(tag) + ">";
    std::string close = "</" + std::string(tag) + ">";
    size_t begin = text.find(open);
    if (begin == std::string_view::npos) return std::nullopt;
    size_t content_begin = begin + open.size();
    size_t end = text.find(close, content_begin);
    if (end == std::string_view::npos) return std::nullopt;
    size_t reopened = text.find(open, content_begin);
    if (reopened != std::string_view::npos && reopened < end) {
        throw Error(ErrorCode::nested_tags, "<" + std::string(tag) + "> reopened before closing");
    }
    return trim(text.substr(content_begin, end - content_begin));
}

}  // namespace detail

struct QuestionSolution {
    std::string question;
    std::string solution;
};

/// First <Q>...</Q> and first <S>...</S> spans, trimmed.
inline QuestionSolution parse_qs_tags(std::string_view text) {
    auto question = detail::first_tag_span(text, "Q");
    if (!question) throw Error(ErrorCode::missing_q_tag, "no <Q> span");
    auto solution = detail::first_tag_span(text, "S");
    if (!solution) throw Error(ErrorCode::missing_s_tag, "no <S> span");
    return {std::move(*question), std::move(*solution)};
}

}  // namespace sandpipe
