#pragma once
// HTTP-backed providers. Transient failures (transport timeouts, 429, 5xx)
// are retried with exponential backoff plus jitter up to max_retries; auth
// and malformed-body failures are not retried. Each client caps its own
// number of in-flight requests with a semaphore.

#include <httplib.h>

#include <chrono>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "sandpipe/errors.hpp"
#include "sandpipe/providers/interfaces.hpp"
#include "sandpipe/providers/wire.hpp"

namespace sandpipe {

namespace detail {

struct ParsedUrl {
    std::string scheme_host_port;  // e.g. "http://127.0.0.1:8080"
    std::string base_path;         // e.g. "/v1" ("" when none)
};

inline ParsedUrl parse_endpoint(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw Error(ErrorCode::validation_error, "endpoint_url needs a scheme: " + url);
    }
    auto path_start = url.find('/', scheme_end + 3);
    ParsedUrl parsed;
    if (path_start == std::string::npos) {
        parsed.scheme_host_port = url;
    } else {
        parsed.scheme_host_port = url.substr(0, path_start);
        parsed.base_path = url.substr(path_start);
        while (!parsed.base_path.empty() && parsed.base_path.back() == '/') {
            parsed.base_path.pop_back();
        }
    }
    return parsed;
}

// Counting semaphore bounding in-flight requests per client.
class ConcurrencyGate {
public:
    explicit ConcurrencyGate(int slots) : slots_(slots < 1 ? 1 : slots) {}

    void acquire() {
        std::unique_lock lock(mu_);
        cv_.wait(lock, [&] { return in_use_ < slots_; });
        ++in_use_;
    }

    void release() {
        {
            std::lock_guard lock(mu_);
            --in_use_;
        }
        cv_.notify_one();
    }

private:
    std::mutex mu_;
    std::condition_variable cv_;
    int slots_;
    int in_use_ = 0;
};

struct GateGuard {
    ConcurrencyGate& gate;
    explicit GateGuard(ConcurrencyGate& g) : gate(g) { gate.acquire(); }
    ~GateGuard() { gate.release(); }
};

class HttpTransport {
public:
    explicit HttpTransport(ProviderConfig config)
        : config_(std::move(config)),
          url_(parse_endpoint(config_.endpoint_url)),
          gate_(config_.max_concurrent) {}

    const ProviderConfig& config() const { return config_; }

    // Runs the request with the retry policy. `call` receives a connected
    // client and the full path.
    httplib::Result request(const std::string& path,
                            const std::function<httplib::Result(httplib::Client&, const std::string&)>& call) {
        GateGuard guard(gate_);
        std::string full_path = url_.base_path + path;
        int attempt = 0;
        while (true) {
            httplib::Client client(url_.scheme_host_port);
            configure(client);
            auto result = call(client, full_path);
            if (result) {
                int status = result->status;
                if (status == 401 || status == 403) {
                    throw Error(ErrorCode::auth_failure, "status " + std::to_string(status));
                }
                bool transient = status == 429 || status >= 500;
                if (!transient) return result;
                if (attempt >= config_.max_retries) {
                    if (status == 429) {
                        throw Error(ErrorCode::rate_limited, "429 after " +
                                        std::to_string(attempt) + " retries");
                    }
                    throw Error(ErrorCode::http_error,
                                "status " + std::to_string(status) + " after retries");
                }
            } else {
                // transport-level failure (connect/read timeout, refused, ...)
                if (attempt >= config_.max_retries) {
                    throw Error(ErrorCode::timeout,
                                "transport failure: " + httplib::to_string(result.error()));
                }
            }
            backoff(attempt);
            ++attempt;
        }
    }

private:
    void configure(httplib::Client& client) {
        auto ms = std::chrono::milliseconds(config_.timeout_ms);
        client.set_connection_timeout(ms);
        client.set_read_timeout(ms);
        client.set_write_timeout(ms);
        if (!config_.api_key_env.empty()) {
            if (const char* key = std::getenv(config_.api_key_env.c_str())) {
                client.set_default_headers({{"Authorization", std::string("Bearer ") + key}});
            }
        }
    }

    void backoff(int attempt) {
        // jitter in [0.5, 1.0) of the exponential step; timing only, never
        // part of any pipeline output
        thread_local std::mt19937_64 jitter_rng{std::random_device{}()};
        double jitter = 0.5 + 0.5 * std::uniform_real_distribution<double>()(jitter_rng);
        double delay = static_cast<double>(config_.backoff_base_ms) * (1 << attempt) * jitter;
        std::this_thread::sleep_for(std::chrono::milliseconds(static_cast<long>(delay)));
    }

    ProviderConfig config_;
    ParsedUrl url_;
    ConcurrencyGate gate_;
};

}  // namespace detail

class HttpChatProvider : public ChatProvider {
public:
    HttpChatProvider(ProviderConfig config, std::string model)
        : transport_(std::move(config)), model_(std::move(model)) {}

protected:
    ChatResponse do_chat(const ChatRequest& request) override {
        ChatRequest wire_request = request;
        wire_request.model = request.model.empty() ? model_ : request.model;
        std::string body = wire::build_chat_body(wire_request);
        auto result = transport_.request("/chat/completions", [&](httplib::Client& c, const std::string& p) {
            return c.Post(p, body, "application/json");
        });
        if (result->status != 200) {
            throw Error(ErrorCode::http_error, "status " + std::to_string(result->status));
        }
        return wire::parse_chat_body(result->body, request.n_samples);
    }

private:
    detail::HttpTransport transport_;
    std::string model_;
};

class HttpEmbeddingProvider : public EmbeddingProvider {
public:
    HttpEmbeddingProvider(ProviderConfig config, std::string model)
        : transport_(std::move(config)), model_(std::move(model)) {}

protected:
    std::vector<EmbeddingVector> do_embed(const std::vector<std::string>& texts) override {
        std::string body = wire::build_embeddings_body(model_, texts);
        auto result = transport_.request("/embeddings", [&](httplib::Client& c, const std::string& p) {
            return c.Post(p, body, "application/json");
        });
        if (result->status != 200) {
            throw Error(ErrorCode::http_error, "status " + std::to_string(result->status));
        }
        return wire::parse_embeddings_body(result->body, texts.size());
    }

private:
    detail::HttpTransport transport_;
    std::string model_;
};

// SearXNG JSON API client.
class SearxngSearchProvider : public SearchProvider {
public:
    explicit SearxngSearchProvider(ProviderConfig config) : transport_(std::move(config)) {}

protected:
    std::vector<SearchResult> do_search(const std::string& query, int k) override {
        std::string path = wire::build_search_path(query);
        auto result = transport_.request(path, [&](httplib::Client& c, const std::string& p) {
            return c.Get(p);
        });
        if (result->status != 200) {
            throw Error(ErrorCode::http_error, "status " + std::to_string(result->status));
        }
        auto results = wire::parse_search_body(result->body);
        if (static_cast<int>(results.size()) > k) results.resize(static_cast<size_t>(k));
        return results;
    }

private:
    detail::HttpTransport transport_;
};

}  // namespace sandpipe
