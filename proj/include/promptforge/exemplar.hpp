#pragma once

#include <string>
#include <vector>

#include "promptforge/common.hpp"
#include "promptforge/embedding.hpp"

namespace promptforge {

// A verified training example: canonical question content, the self-generated
// chain of thought (ending in its answer sentence, label canonicalized), the
// verified answer and the question embedding. By construction `answer` equals
// the gold index of the source item.
struct Exemplar {
    std::string source_id;
    std::string stem;
    std::string context;                // empty = absent
    std::vector<std::string> choices;   // canonical order
    int answer = 0;                     // canonical index
    std::string cot;
    Embedding embedding;

    char answer_label() const { return label_for(static_cast<std::size_t>(answer)); }
};

}  // namespace promptforge
