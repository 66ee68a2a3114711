#include "promptforge/embedding.hpp"

#include <cmath>

namespace promptforge {

double l2_norm(const Embedding& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

void validate_embedding(const Embedding& v) {
    if (v.empty()) throw DataError("embedding must be non-empty");
    for (double x : v) {
        if (!std::isfinite(x)) throw DataError("embedding contains a non-finite value");
    }
    if (l2_norm(v) <= 0.0) throw DataError("embedding has zero norm");
}

double cosine_distance(const Embedding& a, const Embedding& b) {
    if (a.size() != b.size()) {
        throw DataError("embedding dimension mismatch: " + std::to_string(a.size()) + " vs " +
                        std::to_string(b.size()));
    }
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na <= 0.0 || nb <= 0.0) throw DataError("cosine distance of a zero-norm embedding");
    return 1.0 - dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace promptforge
