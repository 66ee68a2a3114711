#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "promptforge/embedding.hpp"

namespace promptforge {

enum class Role { System, User, Assistant };

const char* role_name(Role role);

struct Message {
    Role role = Role::User;
    std::string text;
};

struct ChatRequest {
    std::vector<Message> messages;
    double temperature = 1.0;
    int max_tokens = 1024;
    std::optional<std::uint64_t> seed_hint;  // carries the shuffle nonce, keys mock scripts

    void validate() const;  // at least one user message, 0 <= temperature <= 2, max_tokens > 0
};

enum class FinishReason { Stop, Length, Error };

struct ChatResponse {
    std::string text;
    FinishReason finish_reason = FinishReason::Stop;
};

// Stable digest of the request content: every message (role + text), the
// temperature bucketed to milli-units, and the seed hint. Ensemble calls with
// different shuffles therefore key different script entries.
std::uint64_t request_digest(const ChatRequest& request);

// Chat-completion and embedding backend. Handles are shareable; complete and
// embed are safe to call concurrently.
class Backend {
public:
    virtual ~Backend() = default;

    ChatResponse complete(const ChatRequest& request);
    std::vector<Embedding> embed(const std::vector<std::string>& texts);

    std::uint64_t request_count() const { return requests_.load(std::memory_order_relaxed); }
    virtual std::string description() const = 0;

protected:
    virtual ChatResponse do_complete(const ChatRequest& request) = 0;
    virtual std::vector<Embedding> do_embed(const std::vector<std::string>& texts) = 0;

private:
    std::atomic<std::uint64_t> requests_{0};
};

// Counting semaphore; bounds in-flight requests inside backends.
class Semaphore {
public:
    explicit Semaphore(int count) : count_(count) {}

    void acquire() {
        std::unique_lock lock(m_);
        cv_.wait(lock, [&] { return count_ > 0; });
        --count_;
    }

    void release() {
        {
            std::lock_guard lock(m_);
            ++count_;
        }
        cv_.notify_one();
    }

private:
    std::mutex m_;
    std::condition_variable cv_;
    int count_;
};

class SemaphoreGuard {
public:
    explicit SemaphoreGuard(Semaphore& s) : s_(s) { s_.acquire(); }
    ~SemaphoreGuard() { s_.release(); }
    SemaphoreGuard(const SemaphoreGuard&) = delete;
    SemaphoreGuard& operator=(const SemaphoreGuard&) = delete;

private:
    Semaphore& s_;
};

}  // namespace promptforge
