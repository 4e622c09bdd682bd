#include "belitskii/sampling.hpp"

#include <algorithm>

namespace belitskii {

Rng make_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

const std::vector<Scalar>& eigenvalue_pool() {
    static const std::vector<Scalar> pool{
        Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(Rational(1, 2)), Scalar::i(),
        Scalar(Rational(1), Rational(1)), Scalar(Rational(-3, 2), Rational(1, 3)),
    };
    return pool;
}

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Scalar small_entry(Rng& rng, double zero_probability) {
    if (std::bernoulli_distribution(zero_probability)(rng))
        return Scalar(0);
    long v = uniform(rng, -2, 2);
    return Scalar(v == 0 ? 1 : v);
}

} // namespace

DimensionVector random_dims(Rng& rng, size_t min_total, size_t max_total, size_t min_n) {
    while (true) {
        const size_t total = static_cast<size_t>(uniform(rng, static_cast<long>(min_total), static_cast<long>(max_total)));
        if (total < min_n)
            continue;
        const size_t n = static_cast<size_t>(uniform(rng, static_cast<long>(min_n), static_cast<long>(total)));
        const size_t m = static_cast<size_t>(uniform(rng, 0, static_cast<long>(total - n)));
        return {m, n, total - n - m};
    }
}

ExactMatrix random_invertible(Rng& rng, size_t n) {
    ExactMatrix lower = ExactMatrix::identity(n), upper = ExactMatrix::identity(n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < r; ++c) {
            lower(r, c) = Scalar(uniform(rng, -2, 2));
            upper(c, r) = Scalar(uniform(rng, -2, 2));
        }
    ExactMatrix diag(n, n);
    static const Scalar scales[] = {Scalar(1), Scalar(-1), Scalar(2), Scalar(Rational(1, 3)), Scalar::i()};
    for (size_t k = 0; k < n; ++k)
        diag(k, k) = scales[uniform(rng, 0, 4)];
    return diag * lower * upper;
}

ExactMatrix random_split_matrix(Rng& rng, size_t n) {
    const auto& pool = eigenvalue_pool();
    std::vector<Scalar> spectrum(pool.begin(), pool.end());
    std::shuffle(spectrum.begin(), spectrum.end(), rng);
    spectrum.resize(static_cast<size_t>(uniform(rng, 1, 4)));

    ExactMatrix j(n, n);
    size_t pos = 0;
    while (pos < n) {
        const size_t size = static_cast<size_t>(uniform(rng, 1, static_cast<long>(n - pos)));
        const Scalar& lambda = spectrum[static_cast<size_t>(uniform(rng, 0, static_cast<long>(spectrum.size()) - 1))];
        for (size_t k = 0; k < size; ++k) {
            j(pos + k, pos + k) = lambda;
            if (k + 1 < size)
                j(pos + k, pos + k + 1) = Scalar(1);
        }
        pos += size;
    }
    ExactMatrix p = random_invertible(rng, n);
    return p * j * invert(p);
}

SystemTriple random_system(Rng& rng, DimensionVector d) {
    const double zero_probability = std::uniform_real_distribution<double>(0.2, 0.7)(rng);
    ExactMatrix b(d.n, d.m), c(d.l, d.n);
    for (size_t r = 0; r < d.n; ++r)
        for (size_t k = 0; k < d.m; ++k)
            b(r, k) = small_entry(rng, zero_probability);
    for (size_t r = 0; r < d.l; ++r)
        for (size_t k = 0; k < d.n; ++k)
            c(r, k) = small_entry(rng, zero_probability);
    return SystemTriple(random_split_matrix(rng, d.n), std::move(b), std::move(c));
}

GroupElement random_group_element(Rng& rng, DimensionVector d) {
    return {random_invertible(rng, d.m), random_invertible(rng, d.n), random_invertible(rng, d.l)};
}

} // namespace belitskii
