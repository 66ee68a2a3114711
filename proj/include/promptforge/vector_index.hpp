#pragma once

#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "promptforge/embedding.hpp"

namespace promptforge {

struct IndexEntry {
    std::string exemplar_id;
    Embedding embedding;
};

struct Neighbor {
    std::size_t entry;  // insertion index
    double distance;
};

// Exact cosine-distance k-nearest-neighbor search over a build-then-freeze
// set of embeddings. The scan is OpenMP-parallel; a serial reference with the
// identical contract is kept for tests and the benchmark tool.
//
// Ordering contract: ascending distance, equal distances broken by ascending
// insertion order. k larger than the index returns everything, sorted.
class VectorIndex {
public:
    VectorIndex() = default;

    // Validates the embedding, fixes the index dimension on first insert and
    // enforces it afterwards. Ids must be unique and tab-free.
    void add(std::string exemplar_id, Embedding embedding);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    std::size_t dim() const { return dim_; }
    const IndexEntry& entry(std::size_t i) const { return entries_[i]; }

    std::vector<Neighbor> knn_entries(const Embedding& query, std::size_t k) const;
    std::vector<Neighbor> knn_entries_serial(const Embedding& query, std::size_t k) const;

    std::vector<std::pair<std::string, double>> knn(const Embedding& query,
                                                    std::size_t k) const;

    // Text format: one header line "promptforge-index <version> <dim> <count>",
    // then one record per entry: id TAB values (17 significant digits, so the
    // round trip is exact).
    void save(const std::string& path) const;
    static VectorIndex load(const std::string& path);

private:
    void check_query(const Embedding& query, std::size_t k) const;
    std::vector<Neighbor> select_top(std::vector<double> distances, std::size_t k) const;

    std::vector<IndexEntry> entries_;
    std::vector<double> norms_;  // precomputed at insert
    std::unordered_set<std::string> ids_;
    std::size_t dim_ = 0;
};

}  // namespace promptforge
