#include "promptforge/mock_backend.hpp"

#include <cmath>
#include <fstream>

#include "json.hpp"

namespace promptforge {

using nlohmann::json;
using nlohmann::ordered_json;

Embedding mock_embedding(const std::string& text, std::size_t dim) {
    if (dim == 0) throw ConfigError("mock embedding dimension must be positive");
    SplitMix rng(fnv1a(text));
    Embedding v(dim);
    double norm2 = 0.0;
    for (auto& x : v) {
        // Box-Muller; a Gaussian direction is uniform on the sphere.
        double u1 = rng.uniform01();
        double u2 = rng.uniform01();
        while (u1 <= 0.0) u1 = rng.uniform01();
        x = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
        norm2 += x * x;
    }
    const double norm = std::sqrt(norm2);
    for (auto& x : v) x /= norm;
    return v;
}

std::vector<std::pair<char, std::string>> scan_displayed_choices(const std::string& prompt) {
    const std::string question_mark = "## Question:";
    const auto start = prompt.rfind(question_mark);
    std::vector<std::pair<char, std::string>> choices;
    if (start == std::string::npos) return choices;

    std::size_t pos = start;
    while (pos < prompt.size()) {
        auto eol = prompt.find('\n', pos);
        if (eol == std::string::npos) eol = prompt.size();
        const std::string line = prompt.substr(pos, eol - pos);
        if (line == "## Answer") break;
        if (line.size() >= 3 && line[0] >= 'A' && line[0] <= 'Z' && line[1] == ')' &&
            line[2] == ' ') {
            choices.emplace_back(line[0], line.substr(3));
        }
        pos = eol + 1;
    }
    return choices;
}

namespace {

std::string answer_completion(const std::string& lede, char label) {
    return lede + "\nTherefore, the answer is [" + std::string(1, label) + "]";
}

}  // namespace

ScriptedMockBackend ScriptedMockBackend::from_script(const std::string& path, Fallback fallback,
                                                     std::size_t embed_dim) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open mock script file: " + path);
    ScriptedMockBackend backend(fallback, embed_dim);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            json j = json::parse(line);
            const auto digest =
                std::stoull(j.at("digest").get<std::string>(), nullptr, 16);
            backend.add_script(digest, j.at("text").get<std::string>());
        } catch (const std::exception& e) {
            throw DataError(path + ":" + std::to_string(lineno) + ": bad script record: " +
                            e.what());
        }
    }
    return backend;
}

void ScriptedMockBackend::add_script(std::uint64_t digest, std::string text) {
    script_[digest] = std::move(text);
}

void ScriptedMockBackend::add_script_for(const ChatRequest& request, std::string text) {
    add_script(request_digest(request), std::move(text));
}

void ScriptedMockBackend::save_script(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write mock script file: " + path);
    for (const auto& [digest, text] : script_) {
        ordered_json j;
        j["digest"] = to_hex(digest);
        j["text"] = text;
        out << j.dump() << '\n';
    }
}

std::string ScriptedMockBackend::description() const {
    return std::string("scripted-mock(entries=") + std::to_string(script_.size()) +
           ",fallback=" + (fallback_ == Fallback::Synthesize ? "synth" : "error") +
           ",dim=" + std::to_string(embed_dim_) + ")";
}

ChatResponse ScriptedMockBackend::do_complete(const ChatRequest& request) {
    const auto digest = request_digest(request);
    if (auto it = script_.find(digest); it != script_.end()) {
        return ChatResponse{it->second, FinishReason::Stop};
    }
    if (fallback_ == Fallback::Error) {
        throw BackendError("no scripted response for request digest " + to_hex(digest));
    }
    const auto choices = scan_displayed_choices(request.messages.back().text);
    if (choices.empty()) {
        return ChatResponse{"Synthetic response " + to_hex(digest) + ".", FinishReason::Stop};
    }
    const char label = choices[splitmix64(digest) % choices.size()].first;
    return ChatResponse{
        answer_completion("Synthetic rationale for request " + to_hex(digest) + ".", label),
        FinishReason::Stop};
}

std::vector<Embedding> ScriptedMockBackend::do_embed(const std::vector<std::string>& texts) {
    std::vector<Embedding> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(mock_embedding(t, embed_dim_));
    return out;
}

BiasedMockBackend::BiasedMockBackend(Options options) : options_(std::move(options)) {
    if (!(options_.competence >= 0.0 && options_.competence <= 1.0)) {
        throw ConfigError("biased mock competence must lie in [0,1]");
    }
    if (options_.gold_marker.empty()) throw ConfigError("biased mock needs a gold marker");
}

std::string BiasedMockBackend::description() const {
    return "biased-mock(competence=" + std::to_string(options_.competence) +
           ",seed=" + std::to_string(options_.seed) + ",dim=" +
           std::to_string(options_.embed_dim) + ")";
}

ChatResponse BiasedMockBackend::do_complete(const ChatRequest& request) {
    const auto choices = scan_displayed_choices(request.messages.back().text);
    if (choices.empty()) {
        return ChatResponse{"No choices visible.", FinishReason::Stop};
    }

    char gold = 0;
    for (const auto& [label, text] : choices) {
        if (text.find(options_.gold_marker) != std::string::npos) {
            gold = label;
            break;
        }
    }

    const std::uint64_t coin_bits = mix64(request_digest(request), options_.seed);
    const double coin = static_cast<double>(coin_bits >> 11) * 0x1.0p-53;

    const char answer = (gold != 0 && coin < options_.competence) ? gold : choices.front().first;
    return ChatResponse{answer_completion("Weighing the displayed options.", answer),
                        FinishReason::Stop};
}

std::vector<Embedding> BiasedMockBackend::do_embed(const std::vector<std::string>& texts) {
    std::vector<Embedding> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(mock_embedding(t, options_.embed_dim));
    return out;
}

}  // namespace promptforge
