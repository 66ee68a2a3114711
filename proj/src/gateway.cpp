#include "promptforge/gateway.hpp"

#include <cmath>

namespace promptforge {

const char* role_name(Role role) {
    switch (role) {
        case Role::System: return "system";
        case Role::User: return "user";
        case Role::Assistant: return "assistant";
    }
    return "user";
}

void ChatRequest::validate() const {
    bool has_user = false;
    for (const auto& m : messages) {
        if (m.role == Role::User) has_user = true;
    }
    if (!has_user) throw ConfigError("chat request needs at least one user message");
    if (!(temperature >= 0.0 && temperature <= 2.0)) {
        throw ConfigError("temperature out of range [0,2]: " + std::to_string(temperature));
    }
    if (max_tokens <= 0) throw ConfigError("max_tokens must be positive");
}

std::uint64_t request_digest(const ChatRequest& request) {
    std::uint64_t h = kFnvOffset;
    for (const auto& m : request.messages) {
        h = fnv1a(role_name(m.role), h);
        h = fnv1a("\x1f", h);
        h = fnv1a(m.text, h);
        h = fnv1a("\x1e", h);
    }
    const auto temp_bucket =
        static_cast<std::uint64_t>(std::llround(request.temperature * 1000.0));
    h = fnv1a_u64(temp_bucket, h);
    h = fnv1a_u64(request.seed_hint ? *request.seed_hint + 1 : 0, h);
    return h;
}

ChatResponse Backend::complete(const ChatRequest& request) {
    request.validate();
    requests_.fetch_add(1, std::memory_order_relaxed);
    return do_complete(request);
}

std::vector<Embedding> Backend::embed(const std::vector<std::string>& texts) {
    if (texts.empty()) throw ConfigError("embed requires at least one text");
    requests_.fetch_add(1, std::memory_order_relaxed);
    return do_embed(texts);
}

}  // namespace promptforge
