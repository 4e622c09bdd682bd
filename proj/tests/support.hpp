#pragma once

#include <random>

#include "belitskii/matrix.hpp"
#include "belitskii/sampling.hpp"

namespace belitskii::testing {

inline Scalar random_scalar(Rng& rng, bool complex = true) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    Rational re(num(rng), den(rng));
    Rational im = complex ? Rational(num(rng), den(rng)) : Rational(0);
    return Scalar(re, im);
}

inline ExactMatrix random_matrix(Rng& rng, size_t rows, size_t cols, bool complex = false) {
    ExactMatrix m(rows, cols);
    std::bernoulli_distribution sparse(0.3);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            if (!sparse(rng))
                m(r, c) = random_scalar(rng, complex);
    return m;
}

/// Rank-deficient with probability about one half.
inline ExactMatrix random_low_rank(Rng& rng, size_t rows, size_t cols) {
    const size_t k = std::uniform_int_distribution<size_t>(0, std::min(rows, cols))(rng);
    return random_matrix(rng, rows, k) * random_matrix(rng, k, cols);
}

} // namespace belitskii::testing
