#pragma once

#include <memory>
#include <string>

#include "promptforge/gateway.hpp"

namespace promptforge {

struct HttpBackendConfig {
    std::string base_url;  // e.g. https://api.example.com/v1
    std::string model;
    std::string embed_model;
    std::string api_key;  // resolved from PROMPTFORGE_API_KEY when empty
    int max_attempts = 4;
    int base_backoff_ms = 250;
    int max_in_flight = 5;
    int timeout_s = 120;
};

// Chat-completions wire protocol over HTTP: POST {base}/chat/completions and
// POST {base}/embeddings with bearer-token auth. Transient failures
// (connect errors, 408, 429, 5xx) retry with exponential backoff plus jitter
// up to max_attempts; auth and malformed-request failures surface at once.
// In-flight requests are capped at max_in_flight.
class HttpBackend : public Backend {
public:
    explicit HttpBackend(HttpBackendConfig config);
    ~HttpBackend() override;

    std::string description() const override;

protected:
    ChatResponse do_complete(const ChatRequest& request) override;
    std::vector<Embedding> do_embed(const std::vector<std::string>& texts) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace promptforge
