#include <gtest/gtest.h>

#include "belitskii/analysis.hpp"
#include "belitskii/catalog.hpp"
#include "support.hpp"

using namespace belitskii;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

SystemTriple lambda_one_one(long lambda) {
    return SystemTriple(ExactMatrix{{q(lambda)}}, ExactMatrix{{1}}, ExactMatrix{{1}});
}

ReducedBlock block(BlockKind kind, size_t rows, size_t cols, size_t r = 0, EigenStructure s = {}) {
    ReducedBlock b;
    b.kind = kind;
    b.rows = rows;
    b.cols = cols;
    b.rank = r;
    b.structure = std::move(s);
    return b;
}

std::vector<SystemTriple> canonicals(const std::vector<CanonicalSystem>& parts) {
    std::vector<SystemTriple> out;
    for (const auto& p : parts)
        out.push_back(p.canonical);
    return out;
}

} // namespace

TEST(SigmaOfBlock, Examples) {
    EXPECT_EQ(sigma_of_block(block(BlockKind::Empty, 1, 1)), 1u);
    EXPECT_EQ(sigma_of_block(block(BlockKind::Empty, 2, 3)), 6u);
    EXPECT_EQ(sigma_of_block(block(BlockKind::EdgeIdentity, 1, 1, 1)), 1u);
    EXPECT_EQ(sigma_of_block(block(BlockKind::EdgeIdentity, 2, 3, 1)), 4u);
    EXPECT_EQ(sigma_of_block(block(BlockKind::WeyrBlock, 2, 2, 0, {{{q(0), {2}}}})), 2u);
    EXPECT_EQ(sigma_of_block(block(BlockKind::WeyrBlock, 1, 1, 0, {{{q(5), {1}}}})), 0u);
}

TEST(OrbitDimension, Examples) {
    SystemTriple ex(ExactMatrix{{0, 1}, {0, 0}}, ExactMatrix{{0}, {1}}, ExactMatrix{{1, 5}});
    OrbitInfo info = orbit_dimension(canonicalize(ex));
    EXPECT_EQ(info.dim_orbit, 5u);
    EXPECT_EQ(info.dim_group, 6u);
    EXPECT_EQ(info.dim_stabilizer, 1u);
    EXPECT_EQ(info.dim_system_space, 8u);

    EXPECT_EQ(orbit_dimension(canonicalize(lambda_one_one(4))).dim_orbit, 2u);
    SystemTriple scalar(ExactMatrix{{q(9)}}, ExactMatrix(1, 0), ExactMatrix(0, 1));
    EXPECT_EQ(orbit_dimension(canonicalize(scalar)).dim_orbit, 0u);
}

TEST(OrbitOracle, Examples) {
    EXPECT_EQ(orbit_dimension_oracle(lambda_one_one(4)), 2u);
    SystemTriple ex(ExactMatrix{{0, 1}, {0, 0}}, ExactMatrix{{0}, {1}}, ExactMatrix{{1, 5}});
    EXPECT_EQ(orbit_dimension_oracle(ex), 5u);
    EXPECT_EQ(orbit_dimension_oracle(SystemTriple::zero({2, 3, 1})), 0u);
    // No spectrum needed.
    SystemTriple irrational(ExactMatrix{{0, 1}, {2, 0}}, ExactMatrix(2, 0), ExactMatrix(0, 2));
    EXPECT_EQ(orbit_dimension_oracle(irrational), 2u);
}

TEST(EndomorphismBasis, Examples) {
    auto e = endomorphism_basis(lambda_one_one(4));
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0].x, e[0].y);
    EXPECT_EQ(e[0].y, e[0].z);

    SystemTriple sum = direct_sum(lambda_one_one(0), lambda_one_one(1));
    EXPECT_EQ(endomorphism_basis(sum).size(), 2u);
    EXPECT_EQ(endomorphism_basis(SystemTriple::zero({1, 1, 1})).size(), 3u);

    Rng rng = make_rng(41, 0);
    SystemTriple s = random_system(rng, {1, 3, 2});
    for (const auto& g : endomorphism_basis(s)) {
        EXPECT_EQ(g.y * s.a, s.a * g.y);
        EXPECT_EQ(g.y * s.b, s.b * g.x);
        EXPECT_EQ(g.z * s.c, s.c * g.y);
    }
}

TEST(LocalRing, Examples) {
    EXPECT_TRUE(is_indecomposable_by_local_ring(lambda_one_one(2)));
    SystemTriple l10(ExactMatrix{{q(3)}}, ExactMatrix{{1}}, ExactMatrix(0, 1));
    EXPECT_FALSE(is_indecomposable_by_local_ring(direct_sum(l10, l10)));
    SystemTriple jb(ExactMatrix{{0, 1}, {0, 0}}, ExactMatrix{{0}, {1}}, ExactMatrix(0, 2));
    EXPECT_TRUE(is_indecomposable_by_local_ring(jb));
    EXPECT_FALSE(is_indecomposable_by_local_ring(SystemTriple::zero({1, 1, 1})));
    EXPECT_FALSE(is_indecomposable_by_local_ring(SystemTriple::zero({0, 0, 0})));
    EXPECT_TRUE(is_indecomposable_by_local_ring(SystemTriple::zero({1, 0, 0})));
}

TEST(LinkCount, Examples) {
    CanonicalSystem c = canonicalize(lambda_one_one(2));
    EXPECT_EQ(link_count(c), 2u);
    EXPECT_TRUE(is_indecomposable_by_links(c));

    SystemTriple jb(ExactMatrix{{0, 1}, {0, 0}}, ExactMatrix{{0}, {1}}, ExactMatrix(0, 2));
    c = canonicalize(jb);
    EXPECT_EQ(link_count(c), 2u);
    EXPECT_TRUE(is_indecomposable_by_links(c));

    SystemTriple flat(ExactMatrix::scalar(2, q(1)), ExactMatrix{{1}, {0}}, ExactMatrix(0, 2));
    c = canonicalize(flat);
    EXPECT_EQ(link_count(c), 1u);
    EXPECT_FALSE(is_indecomposable_by_links(c));
}

TEST(Decompose, Examples) {
    const Template* t = find_template("d121-04");
    ASSERT_NE(t, nullptr);
    SystemTriple entry = instantiate(*t, {{"λ", q(2)}});
    auto parts = decompose(entry);
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].canonical, entry);

    auto zero = decompose(SystemTriple::zero({1, 1, 1}));
    ASSERT_EQ(zero.size(), 3u);
    EXPECT_EQ(zero[0].canonical.dims(), (DimensionVector{0, 0, 1}));
    EXPECT_EQ(zero[1].canonical.dims(), (DimensionVector{0, 1, 0}));
    EXPECT_EQ(zero[2].canonical.dims(), (DimensionVector{1, 0, 0}));

    EXPECT_EQ(decompose(SystemTriple::zero({2, 0, 1})).size(), 3u);
    EXPECT_TRUE(decompose(SystemTriple::zero({0, 0, 0})).empty());
}

TEST(Decompose, ConjugatedSumOfTableEntries) {
    SystemTriple e1 = instantiate(*find_template("d111-01"), {{"λ", q(1)}});
    SystemTriple e2 = instantiate(*find_template("d120-03"), {{"λ", q(-1, 2)}, {"μ", q(0)}});
    SystemTriple sum = direct_sum(e1, e2);
    Rng rng = make_rng(42, 0);
    auto parts = decompose(apply_group(random_group_element(rng, sum.dims()), sum));
    ASSERT_EQ(parts.size(), 2u);
    std::vector<SystemTriple> expected{e1, e2};
    std::sort(expected.begin(), expected.end(), summand_less);
    EXPECT_EQ(canonicals(parts), expected);
    EXPECT_EQ(match_template(parts[0])->id, "d111-01");
    EXPECT_EQ(match_template(parts[1])->id, "d120-03");
}

TEST(AnalysisProperties, RandomSystems) {
    for (size_t k = 0; k < 150; ++k) {
        Rng rng = make_rng(43, k);
        DimensionVector d = random_dims(rng, 1, 6, 1);
        SystemTriple s = random_system(rng, d);
        SCOPED_TRACE(describe(s));
        CanonicalSystem c = canonicalize(s);
        OrbitInfo info = orbit_dimension(c);
        const size_t oracle = orbit_dimension_oracle(s);
        EXPECT_EQ(info.dim_orbit, oracle);
        EXPECT_EQ(info.dim_stabilizer, endomorphism_basis(s).size());
        EXPECT_EQ(info.dim_stabilizer, c.final_stabilizer.dimension());
        EXPECT_EQ(is_indecomposable_by_links(c), is_indecomposable_by_local_ring(s));

        auto parts = decompose(s);
        DimensionVector sum{0, 0, 0};
        size_t stab_sum = 0;
        for (const auto& p : parts) {
            sum.m += p.canonical.dims().m;
            sum.n += p.canonical.dims().n;
            sum.l += p.canonical.dims().l;
            EXPECT_TRUE(is_indecomposable_by_links(p));
            EXPECT_TRUE(is_indecomposable_by_local_ring(p.canonical));
            stab_sum += orbit_dimension(p).dim_stabilizer;
        }
        EXPECT_EQ(sum, d);
        EXPECT_GE(info.dim_stabilizer, stab_sum);
        auto again = decompose(apply_group(random_group_element(rng, d), s));
        EXPECT_EQ(canonicals(again), canonicals(parts));
    }
}
