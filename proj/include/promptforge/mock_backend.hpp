#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "promptforge/gateway.hpp"

namespace promptforge {

// Deterministic hash-seeded unit vector for a text; the embedding contract of
// both mock backends. Same text, same vector, always.
Embedding mock_embedding(const std::string& text, std::size_t dim);

// Choices of the last "## Question:" block in a rendered prompt, as displayed.
// Empty when the prompt holds no recognizable choice lines.
std::vector<std::pair<char, std::string>> scan_displayed_choices(const std::string& prompt);

// Replays canned responses keyed by request digest. Without a matching entry
// it either synthesizes a deterministic completion from the digest (picking a
// displayed choice for MCQ prompts) or fails, depending on the fallback mode.
// Responses are pure functions of the request content.
class ScriptedMockBackend : public Backend {
public:
    enum class Fallback { Synthesize, Error };

    explicit ScriptedMockBackend(Fallback fallback = Fallback::Synthesize,
                                 std::size_t embed_dim = 64)
        : fallback_(fallback), embed_dim_(embed_dim) {}

    // Script file: line-delimited {"digest": "<16 hex chars>", "text": "..."}.
    static ScriptedMockBackend from_script(const std::string& path,
                                           Fallback fallback = Fallback::Error,
                                           std::size_t embed_dim = 64);

    void add_script(std::uint64_t digest, std::string text);
    void add_script_for(const ChatRequest& request, std::string text);
    void save_script(const std::string& path) const;
    std::size_t script_size() const { return script_.size(); }

    std::string description() const override;

protected:
    ChatResponse do_complete(const ChatRequest& request) override;
    std::vector<Embedding> do_embed(const std::vector<std::string>& texts) override;

private:
    std::unordered_map<std::uint64_t, std::string> script_;
    Fallback fallback_;
    std::size_t embed_dim_;
};

// Position-biased multiple-choice answerer for offline benchmark runs. With
// probability `competence` it answers the displayed choice whose text contains
// `gold_marker` (the convention used by synthetic benchmark items); otherwise
// it answers the first displayed choice, i.e. pure position bias. The coin is
// a hash of (request content, seed), so calls are independent across shuffle
// nonces yet reproducible, and the backend is safe for concurrent fan-out.
// Prompts without a recognizable choice block get the first-position answer.
class BiasedMockBackend : public Backend {
public:
    struct Options {
        double competence = 0.6;
        std::uint64_t seed = 0;
        std::string gold_marker = "(correct)";
        std::size_t embed_dim = 64;
    };

    explicit BiasedMockBackend(Options options);

    const Options& options() const { return options_; }
    std::string description() const override;

protected:
    ChatResponse do_complete(const ChatRequest& request) override;
    std::vector<Embedding> do_embed(const std::vector<std::string>& texts) override;

private:
    Options options_;
};

}  // namespace promptforge
