#pragma once
// Abstract provider interfaces. Everything the pipeline needs from the
// outside world goes through these, so stages can run against HTTP services
// or the deterministic mocks interchangeably. Implementations must be safe
// for concurrent calls.

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "sandpipe/providers/types.hpp"

namespace sandpipe {

class ChatProvider {
public:
    virtual ~ChatProvider() = default;

    ChatResponse chat_complete(const ChatRequest& request) {
        request.validate();
        calls_.fetch_add(1, std::memory_order_relaxed);
        return do_chat(request);
    }

    std::uint64_t call_count() const { return calls_.load(std::memory_order_relaxed); }

protected:
    virtual ChatResponse do_chat(const ChatRequest& request) = 0;

private:
    std::atomic<std::uint64_t> calls_{0};
};

class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;

    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) {
        if (texts.empty()) throw Error(ErrorCode::empty_input, "embed() needs at least one text");
        calls_.fetch_add(1, std::memory_order_relaxed);
        return do_embed(texts);
    }

    std::uint64_t call_count() const { return calls_.load(std::memory_order_relaxed); }

protected:
    virtual std::vector<EmbeddingVector> do_embed(const std::vector<std::string>& texts) = 0;

private:
    std::atomic<std::uint64_t> calls_{0};
};

class SearchProvider {
public:
    virtual ~SearchProvider() = default;

    // At most k results, engine ranking preserved. Empty is a valid return.
    std::vector<SearchResult> web_search(const std::string& query, int k) {
        if (k < 1) throw Error(ErrorCode::validation_error, "k must be >= 1");
        calls_.fetch_add(1, std::memory_order_relaxed);
        return do_search(query, k);
    }

    std::uint64_t call_count() const { return calls_.load(std::memory_order_relaxed); }

protected:
    virtual std::vector<SearchResult> do_search(const std::string& query, int k) = 0;

private:
    std::atomic<std::uint64_t> calls_{0};
};

}  // namespace sandpipe
