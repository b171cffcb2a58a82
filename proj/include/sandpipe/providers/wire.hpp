#pragma once
// Wire formats for the three external services, kept as pure functions so
// golden fixtures can pin the exact bytes independently of any networking:
//   POST {endpoint}/chat/completions   (OpenAI-compatible chat)
//   POST {endpoint}/embeddings         (OpenAI-compatible embeddings)
//   GET  {endpoint}/search?q=...&format=json   (SearXNG)
// Requests contain no volatile fields. Response ids/timestamps are ignored
// by the parsers.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sandpipe/errors.hpp"
#include "sandpipe/providers/types.hpp"

namespace sandpipe {

namespace wire {

using json = nlohmann::json;

inline std::string build_chat_body(const ChatRequest& request) {
    json body;
    body["model"] = request.model;
    json messages = json::array();
    if (request.system_prompt) {
        messages.push_back({{"role", "system"}, {"content", *request.system_prompt}});
    }
    messages.push_back({{"role", "user"}, {"content", request.user_prompt}});
    body["messages"] = messages;
    body["temperature"] = request.temperature;
    body["n"] = request.n_samples;
    if (request.max_tokens) body["max_tokens"] = *request.max_tokens;
    return body.dump();
}

inline ChatResponse parse_chat_body(const std::string& body, int expected_n) {
    json doc = json::parse(body, nullptr, false);
    if (doc.is_discarded() || !doc.contains("choices") || !doc["choices"].is_array()) {
        throw Error(ErrorCode::malformed_response, "chat response lacks choices[]");
    }
    ChatResponse response;
    for (const auto& choice : doc["choices"]) {
        if (!choice.contains("message") || !choice["message"].contains("content") ||
            !choice["message"]["content"].is_string()) {
            throw Error(ErrorCode::malformed_response, "choice lacks message.content");
        }
        response.completions.push_back(choice["message"]["content"].get<std::string>());
    }
    if (static_cast<int>(response.completions.size()) != expected_n) {
        throw Error(ErrorCode::malformed_response,
                    "expected " + std::to_string(expected_n) + " completions, got " +
                        std::to_string(response.completions.size()));
    }
    if (doc.contains("usage") && doc["usage"].is_object()) {
        response.usage.prompt_tokens = doc["usage"].value("prompt_tokens", 0);
        response.usage.completion_tokens = doc["usage"].value("completion_tokens", 0);
    }
    return response;
}

inline std::string build_embeddings_body(const std::string& model,
                                         const std::vector<std::string>& texts) {
    json body;
    body["model"] = model;
    body["input"] = texts;
    return body.dump();
}

inline std::vector<EmbeddingVector> parse_embeddings_body(const std::string& body,
                                                          size_t expected_n) {
    json doc = json::parse(body, nullptr, false);
    if (doc.is_discarded() || !doc.contains("data") || !doc["data"].is_array()) {
        throw Error(ErrorCode::malformed_response, "embeddings response lacks data[]");
    }
    std::vector<EmbeddingVector> out(doc["data"].size());
    size_t fallback_index = 0;
    for (const auto& item : doc["data"]) {
        if (!item.contains("embedding") || !item["embedding"].is_array()) {
            throw Error(ErrorCode::malformed_response, "data item lacks embedding[]");
        }
        size_t index = item.value("index", fallback_index);
        if (index >= out.size()) throw Error(ErrorCode::malformed_response, "embedding index out of range");
        out[index] = EmbeddingVector(item["embedding"].get<std::vector<double>>());
        ++fallback_index;
    }
    if (out.size() != expected_n) {
        throw Error(ErrorCode::malformed_response, "embedding count mismatch");
    }
    for (const auto& v : out) {
        if (v.dim == 0 || v.dim != out.front().dim) {
            throw Error(ErrorCode::malformed_response, "inconsistent embedding dims");
        }
    }
    return out;
}

inline std::string url_encode(const std::string& s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    out.reserve(s.size() * 3);
    for (unsigned char c : s) {
        if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0xf]);
        }
    }
    return out;
}

inline std::string build_search_path(const std::string& query) {
    return "/search?q=" + url_encode(query) + "&format=json";
}

// SearXNG result list. Hits where both title and snippet are empty carry no
// usable text and are dropped.
inline std::vector<SearchResult> parse_search_body(const std::string& body) {
    json doc = json::parse(body, nullptr, false);
    if (doc.is_discarded() || !doc.contains("results") || !doc["results"].is_array()) {
        throw Error(ErrorCode::malformed_response, "search response lacks results[]");
    }
    std::vector<SearchResult> out;
    for (const auto& item : doc["results"]) {
        SearchResult r;
        r.url = item.value("url", "");
        r.title = item.value("title", "");
        r.snippet = item.value("content", "");
        if (r.title.empty() && r.snippet.empty()) continue;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace wire

}  // namespace sandpipe
