#include <gtest/gtest.h>

#include "belitskii/error.hpp"
#include "belitskii/weyr.hpp"
#include "support.hpp"

using namespace belitskii;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }
Scalar c(long re, long im) { return Scalar(Rational(re), Rational(im)); }

ExactMatrix evaluate_at(const Polynomial& p, const ExactMatrix& a) {
    ExactMatrix acc(a.rows(), a.cols());
    for (size_t k = p.size(); k-- > 0;)
        acc = acc * a + ExactMatrix::scalar(a.rows(), p[k]);
    return acc;
}

std::vector<size_t> weyr_characteristic(const ExactMatrix& a, const Scalar& lambda) {
    const size_t n = a.rows();
    ExactMatrix nil = a - ExactMatrix::scalar(n, lambda), power = ExactMatrix::identity(n);
    std::vector<size_t> w;
    size_t prev = 0;
    while (true) {
        power = power * nil;
        const size_t kernel = n - rank(power);
        if (kernel == prev)
            return w;
        w.push_back(kernel - prev);
        prev = kernel;
    }
}

} // namespace

TEST(Polynomial, FactorInteger) {
    EXPECT_EQ(factor_integer(1), std::vector<mpz_class>{});
    EXPECT_EQ(factor_integer(360), (std::vector<mpz_class>{2, 2, 2, 3, 3, 5}));
    mpz_class big("1000000016000000063");  // 1000000007 * 1000000009
    EXPECT_EQ(factor_integer(big), (std::vector<mpz_class>{1000000007, 1000000009}));
}

TEST(Polynomial, GaussianRoots) {
    // (x - 1/2)(x + 3)(x - (2 - i)) = roots in Q(i)
    Polynomial p{Scalar(1)};
    for (const Scalar& r : {q(1, 2), q(-3), c(2, -1)}) {
        Polynomial f{-r, Scalar(1)}, out(p.size() + 1);
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = 0; j < f.size(); ++j)
                out[i + j] += p[i] * f[j];
        p = out;
    }
    EXPECT_EQ(gaussian_rational_roots(p), (std::vector<Scalar>{q(-3), q(1, 2), c(2, -1)}));
    SplitResult s = split_over_gaussian_rationals(Polynomial{Scalar(-2), Scalar(0), Scalar(1)});
    EXPECT_TRUE(s.roots.empty());
    EXPECT_EQ(degree(s.residual), 2);
}

TEST(CharPoly, Examples) {
    EXPECT_EQ(char_poly(ExactMatrix{{0, 1}, {0, 0}}), (Polynomial{0, 0, 1}));
    EXPECT_EQ(char_poly(ExactMatrix{{3}}), (Polynomial{-3, 1}));
    EXPECT_EQ(char_poly(ExactMatrix{{1, 0}, {0, 2}}), (Polynomial{2, -3, 1}));
}

TEST(Eigenvalues, Examples) {
    EXPECT_EQ(eigenvalues(ExactMatrix{{5, 1}, {0, 5}}), (std::vector<Scalar>{5, 5}));
    EXPECT_EQ(eigenvalues(ExactMatrix{{0, -1}, {1, 0}}), (std::vector<Scalar>{c(0, -1), c(0, 1)}));
    try {
        eigenvalues(ExactMatrix{{0, 1}, {2, 0}});
        FAIL() << "expected EigenvaluesNotInField";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EigenvaluesNotInField);
        EXPECT_NE(std::string(e.what()).find("-2 0 1"), std::string::npos) << e.what();
    }
}

TEST(JordanPartition, Examples) {
    EXPECT_EQ(jordan_partition(ExactMatrix{{0, 1}, {0, 0}}, q(0)), (std::vector<size_t>{2}));
    EXPECT_EQ(jordan_partition(ExactMatrix(3, 3), q(0)), (std::vector<size_t>{1, 1, 1}));
    ExactMatrix j21{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}};
    EXPECT_EQ(jordan_partition(j21, q(0)), (std::vector<size_t>{2, 1}));
    try {
        jordan_partition(j21, q(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAnEigenvalue);
    }
}

TEST(WeyrForm, Examples) {
    ExactMatrix j2{{4, 1}, {0, 4}};
    WeyrDecomposition w = weyr_form(j2);
    EXPECT_EQ(w.form.matrix, j2);

    ExactMatrix a{{1, 1}, {0, 2}};
    w = weyr_form(a);
    EXPECT_EQ(w.form.matrix, (ExactMatrix{{1, 0}, {0, 2}}));
    EXPECT_EQ(w.transform * a * invert(w.transform), w.form.matrix);

    ExactMatrix j21{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}};
    w = weyr_form(j21);
    EXPECT_EQ(w.form.matrix, (ExactMatrix{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
    EXPECT_EQ(w.form.strip_sizes, (std::vector<std::vector<size_t>>{{2, 1}}));
    EXPECT_EQ(w.transform * j21 * invert(w.transform), w.form.matrix);
}

TEST(CentralizerDim, Examples) {
    EXPECT_EQ(centralizer_dim({{{q(0), {2}}}}), 2u);
    EXPECT_EQ(centralizer_dim({{{q(0), {1, 1}}}}), 4u);
    EXPECT_EQ(centralizer_dim({{{q(0), {1}}, {q(1), {1}}}}), 2u);
}

TEST(JordanPresentation, Examples) {
    EigenStructure single{{{q(3), {2}}}};
    JordanPresentation p = jordan_presentation(weyr_matrix(single));
    EXPECT_TRUE(p.permutation.is_identity());
    EXPECT_EQ(p.jordan, jordan_matrix(single));

    EigenStructure diag{{{q(0), {1}}, {q(1), {1}}}};
    EXPECT_TRUE(jordan_presentation(weyr_matrix(diag)).permutation.is_identity());

    EigenStructure mixed{{{q(0), {2, 1}}}};
    WeyrForm w = weyr_matrix(mixed);
    p = jordan_presentation(w);
    EXPECT_FALSE(p.permutation.is_identity());
    EXPECT_EQ(p.permutation * w.matrix * p.permutation.transpose(), jordan_matrix(mixed));
}

TEST(WeyrProperties, RandomSplitMatrices) {
    for (size_t k = 0; k < 150; ++k) {
        Rng rng = make_rng(21, k);
        const size_t n = std::uniform_int_distribution<size_t>(1, 6)(rng);
        ExactMatrix a = random_split_matrix(rng, n);
        WeyrDecomposition w = weyr_form(a);
        EXPECT_EQ(w.transform * a * invert(w.transform), w.form.matrix);
        EXPECT_EQ(weyr_matrix(w.form.structure).matrix, w.form.matrix);
        EXPECT_TRUE(evaluate_at(char_poly(a), a).is_zero());
        EXPECT_EQ(centralizer_dim(w.form.structure), nullspace(commutant_map(a)).size());
        for (size_t b = 0; b < w.form.structure.blocks.size(); ++b) {
            const auto& blk = w.form.structure.blocks[b];
            if (b > 0)
                EXPECT_LT(w.form.structure.blocks[b - 1].eigenvalue, blk.eigenvalue);
            auto wc = weyr_characteristic(a, blk.eigenvalue);
            EXPECT_EQ(wc, w.form.strip_sizes[b]);
            EXPECT_EQ(conjugate_partition(blk.partition), wc);
            EXPECT_EQ(conjugate_partition(wc), blk.partition);
        }
        JordanPresentation jp = jordan_presentation(w.form);
        EXPECT_EQ(jp.jordan, jordan_matrix(w.form.structure));
        WeyrDecomposition again = weyr_form(a);
        EXPECT_EQ(again.transform, w.transform);
        EXPECT_EQ(again.form.matrix, w.form.matrix);
    }
}

TEST(WeyrProperties, NilpotentDuality) {
    for (size_t k = 0; k < 100; ++k) {
        Rng rng = make_rng(22, k);
        const size_t n = std::uniform_int_distribution<size_t>(1, 6)(rng);
        std::vector<size_t> parts;
        size_t left = n;
        while (left > 0) {
            parts.push_back(std::uniform_int_distribution<size_t>(1, left)(rng));
            left -= parts.back();
        }
        std::sort(parts.rbegin(), parts.rend());
        EigenStructure s{{{q(0), parts}}};
        ExactMatrix p = random_invertible(rng, n);
        ExactMatrix a = p * jordan_matrix(s) * invert(p);
        EXPECT_EQ(jordan_partition(a, q(0)), parts);
        EXPECT_EQ(conjugate_partition(conjugate_partition(parts)), parts);
        EXPECT_EQ(weyr_form(a).form.strip_sizes.front(), conjugate_partition(parts));
    }
}
