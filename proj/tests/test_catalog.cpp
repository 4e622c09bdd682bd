#include <gtest/gtest.h>

#include <fstream>

#include "belitskii/analysis.hpp"
#include "belitskii/catalog.hpp"
#include "belitskii/error.hpp"
#include "belitskii/io.hpp"

using namespace belitskii;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

} // namespace

TEST(Templates, Counts) {
    EXPECT_EQ(templates(2).size(), 2u);
    EXPECT_EQ(templates(3).size(), 9u);
    EXPECT_EQ(templates(4).size(), 31u);
    std::map<DimensionVector, size_t> per_d;
    for (const auto& t : templates())
        ++per_d[t.d];
    EXPECT_EQ(per_d[(DimensionVector{1, 2, 1})], 8u);
    EXPECT_EQ(per_d[(DimensionVector{1, 3, 0})], 6u);
    EXPECT_EQ(per_d[(DimensionVector{0, 3, 1})], 6u);
    EXPECT_EQ(per_d[(DimensionVector{0, 2, 2})], 1u);
    EXPECT_EQ(per_d[(DimensionVector{2, 2, 0})], 1u);
    EXPECT_EQ(kind_of([] { templates(5); }), ErrorKind::Unsupported);

    auto two = templates(2);
    EXPECT_EQ(two[0].id, "d110-01");
    EXPECT_EQ(two[1].id, "d011-01");
}

TEST(Templates, IdsAreUnique) {
    std::set<std::string> ids;
    for (const auto& t : templates())
        EXPECT_TRUE(ids.insert(t.id).second) << t.id;
}

TEST(Instantiate, Examples) {
    SystemTriple s = instantiate(*find_template("d111-01"), {{"λ", q(0)}});
    EXPECT_EQ(s, SystemTriple(ExactMatrix{{0}}, ExactMatrix{{1}}, ExactMatrix{{1}}));

    s = instantiate(*find_template("d121-01"), {{"λ", q(0)}, {"μ", q(1)}});
    EXPECT_EQ(s, SystemTriple(ExactMatrix{{0, 1}, {0, 0}}, ExactMatrix{{0}, {1}}, ExactMatrix{{1, 1}}));

    EXPECT_EQ(kind_of([] { instantiate(*find_template("d120-03"), {{"λ", q(2)}, {"μ", q(2)}}); }),
              ErrorKind::ParamsNotDistinct);
    EXPECT_EQ(kind_of([] { instantiate(*find_template("d120-03"), {{"λ", q(2)}}); }), ErrorKind::UnboundParam);
    // The loop parameter of C may coincide with the eigenvalue.
    EXPECT_NO_THROW(instantiate(*find_template("d121-01"), {{"λ", q(2)}, {"μ", q(2)}}));
}

TEST(MatchTemplate, Examples) {
    SystemTriple s(ExactMatrix{{3}}, ExactMatrix{{1}}, ExactMatrix{{1}});
    auto m = match_template(canonicalize(s));
    ASSERT_TRUE(m);
    EXPECT_EQ(m->id, "d111-01");
    EXPECT_EQ(m->params.at("λ"), q(3));

    EXPECT_EQ(match_template(trivial_canonical({1, 0, 0}))->id, "vertex-1");
    EXPECT_EQ(match_template(trivial_canonical({0, 0, 1}))->id, "vertex-3");
    SystemTriple j3(ExactMatrix{{2, 1, 0}, {0, 2, 1}, {0, 0, 2}}, ExactMatrix(3, 0), ExactMatrix(0, 3));
    EXPECT_EQ(match_template(canonicalize(j3))->id, "jordan-3");
    EXPECT_FALSE(match_template(canonicalize(SystemTriple::zero({1, 1, 1}))));
}

TEST(MatchTemplate, ReordersEigenvalues) {
    // Eigenvalue parameters in decreasing order are not fixed points, but
    // still match their template after reduction.
    SystemTriple s = instantiate(*find_template("d130-04"), {{"λ", q(5)}, {"μ", q(1)}});
    CanonicalSystem c = canonicalize(s);
    EXPECT_NE(c.canonical, s);
    auto m = match_template(c);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->id, "d130-04");
    EXPECT_EQ(m->params.at("λ"), q(5));
    EXPECT_EQ(m->params.at("μ"), q(1));
}

TEST(CatalogProperties, MatchInvertsInstantiate) {
    for (const auto& params : standard_parameter_sets())
        for (const auto& t : templates()) {
            auto m = match_template(canonicalize(instantiate(t, params)));
            ASSERT_TRUE(m) << t.id;
            EXPECT_EQ(m->id, t.id);
            for (const auto& p : t.parameters)
                EXPECT_EQ(m->params.at(p), params.at(p)) << t.id << " " << p;
        }
}

TEST(CatalogProperties, EntriesArePairwiseInequivalent) {
    for (const auto& params : standard_parameter_sets()) {
        std::vector<std::pair<std::string, SystemTriple>> forms;
        for (const auto& t : templates())
            forms.emplace_back(t.id, canonicalize(instantiate(t, params)).canonical);
        for (size_t i = 0; i < forms.size(); ++i)
            for (size_t j = i + 1; j < forms.size(); ++j)
                EXPECT_NE(forms[i].second, forms[j].second) << forms[i].first << " vs " << forms[j].first;
    }
}

TEST(VerifyCatalog, TableOnly) {
    CatalogReport r = verify_catalog(0, 1);
    EXPECT_EQ(r.fixed_point_checks, 62u);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.fixed_point_failures.empty());
}

TEST(VerifyCatalog, SerialAndParallelAgree) {
    CatalogReport a = verify_catalog(60, 5, Execution::Serial);
    CatalogReport b = verify_catalog(60, 5, Execution::Parallel);
    EXPECT_TRUE(a.ok());
    EXPECT_EQ(dump(report_to_json(a)), dump(report_to_json(b)));
}

TEST(VerifyCatalog, DetectsCorruptedTemplate) {
    Template bad = *find_template("d121-04");
    bad.c[0][0] = "1";  // C = (1, 1) is not in canonical form for J2 with B = (1, 0)
    CatalogReport r;
    check_templates(std::span<const Template>(&bad, 1), r);
    EXPECT_FALSE(r.fixed_point_failures.empty());

    Template split = *find_template("d120-02");
    split.a[0][1] = "0";  // A = λI with B = (1, 0) decomposes
    CatalogReport r2;
    check_templates(std::span<const Template>(&split, 1), r2);
    EXPECT_FALSE(r2.indecomposability_failures.empty());
}

TEST(TemplateFiles, MatchInCodeTable) {
    for (const auto& t : templates()) {
        const std::string path = std::string(BELITSKII_TEMPLATE_DIR) + "/" + t.id + ".json";
        std::ifstream in(path);
        ASSERT_TRUE(in) << path;
        Json file = Json::parse(in);
        EXPECT_EQ(file, template_to_json(t)) << t.id;
    }
}
