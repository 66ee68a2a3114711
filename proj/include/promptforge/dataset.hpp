#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "promptforge/common.hpp"

namespace promptforge {

// One multiple-choice question in the canonical frame. Choices keep their
// source order and are labeled positionally A, B, C, ...; `gold` is the
// canonical index of the correct choice. Loaders re-normalize whatever the
// source used so every downstream permutation works against one frame.
struct McqItem {
    std::string id;
    std::string stem;
    std::string context;  // optional passage rendered before the stem; empty = absent
    std::vector<std::string> choices;
    int gold = 0;

    std::size_t n_choices() const { return choices.size(); }
    char gold_label() const { return label_for(static_cast<std::size_t>(gold)); }

    // Throws DataError on any invariant violation.
    void validate() const;
};

// Line-delimited records: {"id", "question", "context"?, "choices", "answer_idx"}.
// Errors report the offending line number.
std::vector<McqItem> load_dataset(const std::string& path);

// Canonical writer; load followed by save normalizes a well-formed file.
void save_dataset(const std::string& path, const std::vector<McqItem>& items);

std::string dataset_record_json(const McqItem& item);
McqItem dataset_record_from_json(const std::string& line);

enum class SplitTag { EyesOn, EyesOff, Full };

const char* split_tag_name(SplitTag tag);
SplitTag parse_split_tag(const std::string& name);

struct DatasetSplit {
    std::vector<std::string> eyes_on;   // dataset order
    std::vector<std::string> eyes_off;  // dataset order
    std::uint64_t seed = 0;
    double fraction = 0.0;
};

// Deterministic partition: seeded shuffle of a copy of the id list, then a
// prefix take of round(fraction * N) ids (ties round half-up) as eyes-off.
// The source order is never mutated and both output lists keep dataset order.
DatasetSplit eyes_off_split(const std::vector<McqItem>& items, double fraction,
                            std::uint64_t seed);

void save_split(const std::string& path, const DatasetSplit& split);
DatasetSplit load_split(const std::string& path);

// Items belonging to one side of the split, in dataset order. Every id named
// by the chosen side must exist in `items`.
std::vector<McqItem> select_split(const std::vector<McqItem>& items,
                                  const DatasetSplit& split, SplitTag tag);

}  // namespace promptforge
