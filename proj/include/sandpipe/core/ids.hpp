#pragma once
// Content-derived record identifiers. The id is a pure function of the
// question text with whitespace collapsed, so re-ingesting the same question
// always yields the same id and ids sort identically everywhere.

#include <string>
#include <string_view>

#include "sandpipe/errors.hpp"
#include "sandpipe/util/digest.hpp"
#include "sandpipe/util/strings.hpp"

namespace sandpipe {

// 128 bits of SHA-256 in hex. Collision probability is negligible at any
// corpus size this pipeline handles.
inline std::string record_id(std::string_view question) {
    std::string canon = collapse_whitespace(question);
    if (canon.empty()) throw Error(ErrorCode::empty_question, "question text is empty");
    return sha256_hex(canon).substr(0, 32);
}

}  // namespace sandpipe
