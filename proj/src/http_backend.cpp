#include "promptforge/http_backend.hpp"

#include <chrono>
#include <cstdlib>
#include <random>
#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace promptforge {

using nlohmann::json;

namespace {

bool transient_status(int status) {
    return status == 408 || status == 429 || (status >= 500 && status < 600);
}

std::uint64_t jitter_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

}  // namespace

struct HttpBackend::Impl {
    HttpBackendConfig config;
    std::string host;    // scheme://host[:port]
    std::string prefix;  // path component of base_url
    Semaphore in_flight;
    std::mutex jitter_mutex;
    SplitMix jitter{jitter_seed()};

    explicit Impl(HttpBackendConfig cfg)
        : config(std::move(cfg)), in_flight(std::max(1, config.max_in_flight)) {
        if (config.base_url.empty()) throw ConfigError("http backend requires an endpoint");
        if (config.api_key.empty()) {
            if (const char* key = std::getenv("PROMPTFORGE_API_KEY")) config.api_key = key;
        }
        auto scheme_end = config.base_url.find("://");
        if (scheme_end == std::string::npos) {
            throw ConfigError("http backend endpoint must include a scheme: " + config.base_url);
        }
        auto path_start = config.base_url.find('/', scheme_end + 3);
        if (path_start == std::string::npos) {
            host = config.base_url;
        } else {
            host = config.base_url.substr(0, path_start);
            prefix = config.base_url.substr(path_start);
            while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
        }
    }

    int backoff_ms(int attempt) {
        const int base = std::max(1, config.base_backoff_ms);
        std::uint64_t j;
        {
            std::lock_guard lock(jitter_mutex);
            j = jitter.below(static_cast<std::uint64_t>(base));
        }
        return base * (1 << attempt) + static_cast<int>(j);
    }

    json post(const std::string& route, const json& body, const char* what) {
        SemaphoreGuard guard(in_flight);
        std::string last_error;
        for (int attempt = 0; attempt < std::max(1, config.max_attempts); ++attempt) {
            if (attempt > 0) {
                std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms(attempt - 1)));
            }
            httplib::Client client(host);
            client.set_connection_timeout(config.timeout_s, 0);
            client.set_read_timeout(config.timeout_s, 0);
            httplib::Headers headers;
            if (!config.api_key.empty()) {
                headers.emplace("Authorization", "Bearer " + config.api_key);
            }
            auto res = client.Post(prefix + route, headers, body.dump(), "application/json");
            if (!res) {
                last_error = "transport failure: " + httplib::to_string(res.error());
                continue;
            }
            if (res->status == 200) {
                try {
                    return json::parse(res->body);
                } catch (const json::exception& e) {
                    throw BackendError(std::string(what) + ": response parse failure: " +
                                       e.what());
                }
            }
            if (res->status == 401 || res->status == 403) {
                throw BackendError(std::string(what) + ": authentication failure (HTTP " +
                                   std::to_string(res->status) + ")");
            }
            if (!transient_status(res->status)) {
                throw BackendError(std::string(what) + ": HTTP " + std::to_string(res->status) +
                                   ": " + res->body.substr(0, 200));
            }
            last_error = "HTTP " + std::to_string(res->status);
        }
        throw BackendError(std::string(what) + ": giving up after " +
                           std::to_string(config.max_attempts) + " attempts (" + last_error +
                           ")");
    }
};

HttpBackend::HttpBackend(HttpBackendConfig config)
    : impl_(std::make_unique<Impl>(std::move(config))) {}

HttpBackend::~HttpBackend() = default;

std::string HttpBackend::description() const {
    return "http(" + impl_->config.base_url + ",model=" + impl_->config.model + ")";
}

ChatResponse HttpBackend::do_complete(const ChatRequest& request) {
    json body;
    body["model"] = impl_->config.model;
    json messages = json::array();
    for (const auto& m : request.messages) {
        messages.push_back({{"role", role_name(m.role)}, {"content", m.text}});
    }
    body["messages"] = std::move(messages);
    body["temperature"] = request.temperature;
    body["max_tokens"] = request.max_tokens;

    const json reply = impl_->post("/chat/completions", body, "complete");

    ChatResponse out;
    try {
        const auto& choice = reply.at("choices").at(0);
        out.text = choice.at("message").at("content").get<std::string>();
        const std::string reason = choice.value("finish_reason", "stop");
        out.finish_reason = reason == "stop"     ? FinishReason::Stop
                            : reason == "length" ? FinishReason::Length
                                                 : FinishReason::Error;
    } catch (const json::exception& e) {
        throw BackendError(std::string("complete: response parse failure: ") + e.what());
    }
    if (out.finish_reason == FinishReason::Stop && out.text.empty()) {
        throw BackendError("complete: empty completion with finish_reason=stop");
    }
    return out;
}

std::vector<Embedding> HttpBackend::do_embed(const std::vector<std::string>& texts) {
    json body;
    body["model"] =
        impl_->config.embed_model.empty() ? impl_->config.model : impl_->config.embed_model;
    body["input"] = texts;

    const json reply = impl_->post("/embeddings", body, "embed");

    std::vector<Embedding> out(texts.size());
    try {
        const auto& data = reply.at("data");
        if (data.size() != texts.size()) {
            throw BackendError("embed: expected " + std::to_string(texts.size()) +
                               " embeddings, got " + std::to_string(data.size()));
        }
        for (std::size_t i = 0; i < data.size(); ++i) {
            const auto slot = data[i].contains("index")
                                  ? data[i]["index"].get<std::size_t>()
                                  : i;
            if (slot >= out.size()) throw BackendError("embed: embedding index out of range");
            out[slot] = data[i].at("embedding").get<Embedding>();
        }
        for (const auto& e : out) validate_embedding(e);
    } catch (const json::exception& e) {
        throw BackendError(std::string("embed: response parse failure: ") + e.what());
    }
    return out;
}

}  // namespace promptforge
