#pragma once

#include <algorithm>
#include <cmath>

#include "sandpipe/errors.hpp"
#include "sandpipe/providers/types.hpp"

namespace sandpipe {

/// dot(u,v) / (|u||v|), clamped to [-1, 1] against round-off.
inline double cosine_similarity(const EmbeddingVector& u, const EmbeddingVector& v) {
    if (u.dim != v.dim) {
        throw Error(ErrorCode::dimension_mismatch,
                    "dims " + std::to_string(u.dim) + " vs " + std::to_string(v.dim));
    }
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (size_t i = 0; i < u.dim; ++i) {
        dot += u.values[i] * v.values[i];
        nu += u.values[i] * u.values[i];
        nv += v.values[i] * v.values[i];
    }
    if (nu == 0.0 || nv == 0.0) throw Error(ErrorCode::zero_vector, "cosine of zero vector");
    return std::clamp(dot / (std::sqrt(nu) * std::sqrt(nv)), -1.0, 1.0);
}

}  // namespace sandpipe
