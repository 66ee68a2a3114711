#include "promptforge/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <unordered_set>

#include "json.hpp"

namespace promptforge {

using nlohmann::json;
using nlohmann::ordered_json;

std::string to_hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf, 16);
}

void McqItem::validate() const {
    if (id.empty()) throw DataError("item id must be nonempty");
    if (id.find_first_of("\t\n\r") != std::string::npos) {
        throw DataError("item id '" + id + "' contains control characters");
    }
    if (choices.size() < 2) {
        throw DataError("item '" + id + "': at least 2 choices required");
    }
    if (choices.size() > 26) {
        throw DataError("item '" + id + "': more than 26 choices cannot be labeled");
    }
    for (std::size_t i = 0; i < choices.size(); ++i) {
        if (choices[i].empty()) {
            throw DataError("item '" + id + "': choice " + std::string(1, label_for(i)) +
                            " has empty text");
        }
    }
    if (gold < 0 || static_cast<std::size_t>(gold) >= choices.size()) {
        throw DataError("item '" + id + "': gold not in labels (answer_idx " +
                        std::to_string(gold) + " of " + std::to_string(choices.size()) +
                        " choices)");
    }
}

McqItem dataset_record_from_json(const std::string& line) {
    json j = json::parse(line);
    if (!j.is_object()) throw DataError("record is not an object");

    McqItem item;
    if (!j.contains("id") || !j["id"].is_string()) throw DataError("missing string field 'id'");
    item.id = j["id"].get<std::string>();

    if (!j.contains("question") || !j["question"].is_string()) {
        throw DataError("missing string field 'question'");
    }
    item.stem = j["question"].get<std::string>();

    if (j.contains("context") && !j["context"].is_null()) {
        if (!j["context"].is_string()) throw DataError("field 'context' must be a string");
        item.context = j["context"].get<std::string>();
    }

    if (!j.contains("choices") || !j["choices"].is_array()) {
        throw DataError("missing array field 'choices'");
    }
    for (const auto& c : j["choices"]) {
        if (!c.is_string()) throw DataError("field 'choices' must hold strings");
        item.choices.push_back(c.get<std::string>());
    }

    if (!j.contains("answer_idx") || !j["answer_idx"].is_number_integer()) {
        throw DataError("missing integer field 'answer_idx'");
    }
    item.gold = j["answer_idx"].get<int>();

    item.validate();
    return item;
}

std::string dataset_record_json(const McqItem& item) {
    ordered_json j;
    j["id"] = item.id;
    j["question"] = item.stem;
    if (!item.context.empty()) j["context"] = item.context;
    j["choices"] = item.choices;
    j["answer_idx"] = item.gold;
    return j.dump();
}

std::vector<McqItem> load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open dataset file: " + path);

    std::vector<McqItem> items;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        McqItem item;
        try {
            item = dataset_record_from_json(line);
        } catch (const json::exception& e) {
            throw DataError(path + ":" + std::to_string(lineno) +
                            ": malformed record: " + e.what());
        } catch (const DataError& e) {
            throw DataError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (!seen.insert(item.id).second) {
            throw DataError(path + ":" + std::to_string(lineno) + ": duplicate id '" +
                            item.id + "'");
        }
        items.push_back(std::move(item));
    }
    return items;
}

void save_dataset(const std::string& path, const std::vector<McqItem>& items) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write dataset file: " + path);
    for (const auto& item : items) {
        out << dataset_record_json(item) << '\n';
    }
}

const char* split_tag_name(SplitTag tag) {
    switch (tag) {
        case SplitTag::EyesOn: return "eyes_on";
        case SplitTag::EyesOff: return "eyes_off";
        case SplitTag::Full: return "full";
    }
    return "full";
}

SplitTag parse_split_tag(const std::string& name) {
    if (name == "eyes_on") return SplitTag::EyesOn;
    if (name == "eyes_off") return SplitTag::EyesOff;
    if (name == "full") return SplitTag::Full;
    throw ConfigError("unknown split tag '" + name + "' (want eyes_on|eyes_off|full)");
}

DatasetSplit eyes_off_split(const std::vector<McqItem>& items, double fraction,
                            std::uint64_t seed) {
    if (items.empty()) throw ConfigError("cannot split an empty dataset");
    if (!(fraction > 0.0 && fraction < 1.0)) {
        throw ConfigError("fraction out of range (0,1): " + std::to_string(fraction));
    }
    const std::size_t n = items.size();
    const auto off_count =
        static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
    if (off_count == 0 || off_count >= n) {
        throw ConfigError("rounding would make either side empty (N=" + std::to_string(n) +
                          ", fraction=" + std::to_string(fraction) + ")");
    }

    std::vector<std::string> ids;
    ids.reserve(n);
    for (const auto& item : items) ids.push_back(item.id);

    SplitMix rng(seed);
    shuffle_in_place(ids, rng);

    std::unordered_set<std::string> off_set(ids.begin(),
                                            ids.begin() + static_cast<std::ptrdiff_t>(off_count));

    DatasetSplit split;
    split.seed = seed;
    split.fraction = fraction;
    for (const auto& item : items) {
        if (off_set.count(item.id)) {
            split.eyes_off.push_back(item.id);
        } else {
            split.eyes_on.push_back(item.id);
        }
    }
    return split;
}

void save_split(const std::string& path, const DatasetSplit& split) {
    ordered_json j;
    j["seed"] = split.seed;
    j["fraction"] = split.fraction;
    j["eyes_on"] = split.eyes_on;
    j["eyes_off"] = split.eyes_off;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write split file: " + path);
    out << j.dump(2) << '\n';
}

DatasetSplit load_split(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open split file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DataError("malformed split file " + path + ": " + e.what());
    }
    DatasetSplit split;
    try {
        split.seed = j.at("seed").get<std::uint64_t>();
        split.fraction = j.at("fraction").get<double>();
        split.eyes_on = j.at("eyes_on").get<std::vector<std::string>>();
        split.eyes_off = j.at("eyes_off").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw DataError("malformed split file " + path + ": " + e.what());
    }
    return split;
}

std::vector<McqItem> select_split(const std::vector<McqItem>& items, const DatasetSplit& split,
                                  SplitTag tag) {
    if (tag == SplitTag::Full) return items;
    const auto& wanted = tag == SplitTag::EyesOn ? split.eyes_on : split.eyes_off;
    std::unordered_set<std::string> want(wanted.begin(), wanted.end());

    std::vector<McqItem> out;
    out.reserve(want.size());
    for (const auto& item : items) {
        if (want.count(item.id)) {
            out.push_back(item);
            want.erase(item.id);
        }
    }
    if (!want.empty()) {
        throw DataError("split names " + std::to_string(want.size()) +
                        " id(s) not present in the dataset (first: '" + *want.begin() + "')");
    }
    return out;
}

}  // namespace promptforge
