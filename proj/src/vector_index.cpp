#include "promptforge/vector_index.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

namespace promptforge {

namespace {

double dot(const Embedding& a, const Embedding& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool neighbor_less(const Neighbor& a, const Neighbor& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.entry < b.entry;
}

}  // namespace

void VectorIndex::add(std::string exemplar_id, Embedding embedding) {
    if (exemplar_id.empty()) throw DataError("index entry id must be nonempty");
    if (exemplar_id.find_first_of("\t\n\r") != std::string::npos) {
        throw DataError("index entry id '" + exemplar_id + "' contains control characters");
    }
    validate_embedding(embedding);
    if (dim_ == 0) {
        dim_ = embedding.size();
    } else if (embedding.size() != dim_) {
        throw DataError("index dimension mismatch on append: index dim " + std::to_string(dim_) +
                        ", entry dim " + std::to_string(embedding.size()));
    }
    if (!ids_.insert(exemplar_id).second) {
        throw DataError("duplicate index entry id '" + exemplar_id + "'");
    }
    norms_.push_back(l2_norm(embedding));
    entries_.push_back(IndexEntry{std::move(exemplar_id), std::move(embedding)});
}

void VectorIndex::check_query(const Embedding& query, std::size_t k) const {
    if (entries_.empty()) throw DataError("knn over an empty index");
    if (k == 0) throw ConfigError("knn requires k >= 1");
    if (query.size() != dim_) {
        throw DataError("query dimension mismatch: index dim " + std::to_string(dim_) +
                        ", query dim " + std::to_string(query.size()));
    }
    validate_embedding(query);
}

std::vector<Neighbor> VectorIndex::select_top(std::vector<double> distances,
                                              std::size_t k) const {
    const std::size_t m = std::min(k, distances.size());
    std::vector<Neighbor> all(distances.size());
    for (std::size_t i = 0; i < distances.size(); ++i) all[i] = Neighbor{i, distances[i]};
    std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m), all.end(),
                      neighbor_less);
    all.resize(m);
    return all;
}

std::vector<Neighbor> VectorIndex::knn_entries(const Embedding& query, std::size_t k) const {
    check_query(query, k);
    const double qn = l2_norm(query);
    const auto n = static_cast<std::ptrdiff_t>(entries_.size());
    std::vector<double> distances(entries_.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        distances[u] = 1.0 - dot(entries_[u].embedding, query) / (norms_[u] * qn);
    }
    return select_top(std::move(distances), k);
}

std::vector<Neighbor> VectorIndex::knn_entries_serial(const Embedding& query,
                                                      std::size_t k) const {
    check_query(query, k);
    std::vector<Neighbor> all(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        all[i] = Neighbor{i, cosine_distance(entries_[i].embedding, query)};
    }
    std::sort(all.begin(), all.end(), neighbor_less);
    all.resize(std::min(k, all.size()));
    return all;
}

std::vector<std::pair<std::string, double>> VectorIndex::knn(const Embedding& query,
                                                             std::size_t k) const {
    auto neighbors = knn_entries(query, k);
    std::vector<std::pair<std::string, double>> out;
    out.reserve(neighbors.size());
    for (const auto& nb : neighbors) {
        out.emplace_back(entries_[nb.entry].exemplar_id, nb.distance);
    }
    return out;
}

void VectorIndex::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write index file: " + path);
    out << "promptforge-index 1 " << dim_ << ' ' << entries_.size() << '\n';
    char buf[32];
    for (const auto& e : entries_) {
        out << e.exemplar_id;
        for (double v : e.embedding) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << '\t' << buf;
        }
        out << '\n';
    }
    if (!out) throw DataError("short write to index file: " + path);
}

VectorIndex VectorIndex::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open index file: " + path);

    std::string header;
    if (!std::getline(in, header)) throw DataError("index file is empty: " + path);
    std::istringstream hs(header);
    std::string magic;
    int version = 0;
    std::size_t dim = 0, count = 0;
    if (!(hs >> magic >> version >> dim >> count) || magic != "promptforge-index") {
        throw DataError("corrupt index header in " + path);
    }
    if (version != 1) {
        throw DataError("unsupported index version " + std::to_string(version) + " in " + path);
    }

    VectorIndex index;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw DataError(path + ":" + std::to_string(lineno) + ": corrupt index record");
        }
        std::string id = line.substr(0, tab);
        Embedding values;
        values.reserve(dim);
        const char* p = line.c_str() + tab;
        char* end = nullptr;
        while (*p == '\t') {
            double v = std::strtod(p + 1, &end);
            if (end == p + 1) {
                throw DataError(path + ":" + std::to_string(lineno) + ": bad numeric value");
            }
            values.push_back(v);
            p = end;
        }
        if (values.size() != dim) {
            throw DataError(path + ":" + std::to_string(lineno) + ": expected " +
                            std::to_string(dim) + " values, got " +
                            std::to_string(values.size()));
        }
        index.add(std::move(id), std::move(values));
    }
    if (index.size() != count) {
        throw DataError("index file " + path + " declares " + std::to_string(count) +
                        " entries but holds " + std::to_string(index.size()));
    }
    return index;
}

}  // namespace promptforge
