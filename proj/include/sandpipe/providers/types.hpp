#pragma once
// Provider-facing value types: requests, responses, embeddings, search hits,
// and per-provider connection settings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sandpipe/errors.hpp"

namespace sandpipe {

struct ChatRequest {
    std::string model;
    std::optional<std::string> system_prompt;
    std::string user_prompt;
    double temperature = 0.0;
    int n_samples = 1;
    std::optional<int> max_tokens;
    // Deterministic mock providers mix this into their output; it is never
    // sent on the wire.
    std::optional<std::uint64_t> seed;

    void validate() const {
        if (n_samples < 1) throw Error(ErrorCode::validation_error, "n_samples must be >= 1");
        if (temperature < 0) throw Error(ErrorCode::validation_error, "temperature must be >= 0");
    }
};

struct TokenUsage {
    std::int64_t prompt_tokens = 0;
    std::int64_t completion_tokens = 0;
};

struct ChatResponse {
    std::vector<std::string> completions;  // length == n_samples
    TokenUsage usage;
};

struct EmbeddingVector {
    std::vector<double> values;
    size_t dim = 0;

    EmbeddingVector() = default;
    explicit EmbeddingVector(std::vector<double> v) : values(std::move(v)), dim(values.size()) {}
};

struct SearchResult {
    std::string url;
    std::string title;
    std::string snippet;

    // Downstream similarity checks run on this concatenation.
    std::string text() const {
        if (title.empty()) return snippet;
        if (snippet.empty()) return title;
        return title + " " + snippet;
    }
};

struct ProviderConfig {
    std::string endpoint_url;
    std::string api_key_env;  // name of the environment variable holding the key
    int timeout_ms = 30000;
    int max_retries = 3;
    int backoff_base_ms = 200;
    int max_concurrent = 4;
};

}  // namespace sandpipe
