#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "promptforge/dataset.hpp"
#include "promptforge/exemplar.hpp"

namespace promptforge {

// Bijection between canonical choice indices and displayed positions for one
// shuffled rendering of a question. Displayed labels are always A, B, C, ...
// assigned positionally; the permutation is what maps them back.
class ChoicePermutation {
public:
    static ChoicePermutation identity(std::size_t n);
    // Uniform permutation drawn from the nonce (Fisher-Yates).
    static ChoicePermutation random(std::size_t n, std::uint64_t nonce);

    std::size_t size() const { return disp_of_canon_.size(); }
    std::uint64_t nonce() const { return nonce_; }
    bool is_identity() const;

    std::size_t displayed_of(std::size_t canonical_index) const;
    std::size_t canonical_of(std::size_t displayed_position) const;

    // Label under which canonical choice `canonical_index` is shown.
    char displayed_label_of(std::size_t canonical_index) const;

private:
    ChoicePermutation() = default;
    std::vector<std::size_t> disp_of_canon_;
    std::vector<std::size_t> canon_of_disp_;
    std::uint64_t nonce_ = 0;
};

// A question as shown to the model: choices reordered by a permutation and
// relabeled positionally.
struct DisplayedItem {
    std::string stem;
    std::string context;
    std::vector<std::string> choices;  // displayed order
    ChoicePermutation permutation;

    std::vector<char> displayed_labels() const { return labels_for(choices.size()); }
};

DisplayedItem display_item(const McqItem& item, ChoicePermutation permutation);
DisplayedItem shuffle_choices(const McqItem& item, std::uint64_t nonce);

// Canonical label of the choice shown under `displayed_label`.
char remap_to_canonical(char displayed_label, const ChoicePermutation& permutation);

// Question-block template. The default is embedded; a file may override it as
// long as it keeps both placeholders. Everything after {{answer_choices}} is
// the answer cue.
struct PromptTemplate {
    std::string text;

    static PromptTemplate standard();
    static PromptTemplate from_file(const std::string& path);
    void validate() const;
};

enum class ExemplarStyle { WithCot, AnswerOnly };

struct RenderOptions {
    PromptTemplate tmpl = PromptTemplate::standard();
    ExemplarStyle style = ExemplarStyle::WithCot;
};

struct RenderedPrompt {
    std::string text;
    ChoicePermutation permutation;     // of the test item
    std::vector<char> displayed_labels;
    std::vector<std::string> exemplar_ids;
};

// Few-shot prompt: each exemplar rendered as a closed question/answer block in
// the canonical frame, the test item rendered last with an open answer cue.
// Byte-deterministic for fixed inputs.
RenderedPrompt render_prompt(const std::vector<const Exemplar*>& exemplars,
                             const DisplayedItem& test, const RenderOptions& options = {});

struct ParsedAnswer {
    char label = 0;          // displayed label
    std::size_t label_pos = 0;  // byte offset of the label character
};

struct ParseOptions {
    bool allow_fallback = true;  // permit the bare-label fallback rule
};

// Primary rule: the last occurrence of case-insensitive "answer is" followed
// by an optional bracket and a valid displayed label. Fallback: the last
// standalone valid label token. nullopt when nothing matches.
std::optional<ParsedAnswer> parse_answer(const std::string& completion,
                                         const std::vector<char>& displayed_labels,
                                         const ParseOptions& options = {});

}  // namespace promptforge
