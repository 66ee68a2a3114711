#pragma once

#include <vector>

#include "promptforge/common.hpp"

namespace promptforge {

using Embedding = std::vector<double>;

double l2_norm(const Embedding& v);

// Throws DataError unless every value is finite and the norm is positive.
void validate_embedding(const Embedding& v);

// 1 - <a,b> / (|a||b|); result lies in [0,2] up to rounding. Accumulation is
// in double precision. Throws DataError on dimension mismatch or zero norm.
double cosine_distance(const Embedding& a, const Embedding& b);

}  // namespace promptforge
