#include "belitskii/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "belitskii/analysis.hpp"
#include "belitskii/error.hpp"
#include "belitskii/sampling.hpp"

namespace belitskii {

namespace {

const char* const kEmpty = "∅";

// Rows separated by ';', entries by spaces.
TemplateMatrix parse_rows(const std::string& text, size_t rows, size_t cols) {
    TemplateMatrix out;
    if (rows == 0 || cols == 0)
        return TemplateMatrix(rows, std::vector<std::string>{});
    std::stringstream all(text);
    std::string row;
    while (std::getline(all, row, ';')) {
        std::stringstream cells(row);
        std::vector<std::string> r;
        std::string cell;
        while (cells >> cell)
            r.push_back(cell);
        out.push_back(std::move(r));
    }
    if (out.size() != rows)
        throw Error(ErrorKind::Internal, "template row count");
    for (const auto& r : out)
        if (r.size() != cols)
            throw Error(ErrorKind::Internal, "template column count");
    return out;
}

bool is_parameter(const std::string& tok) { return tok != "0" && tok != "1" && tok != kEmpty; }

Template make(std::string id, DimensionVector d, const std::string& a, const std::string& b, const std::string& c) {
    Template t{std::move(id), d, parse_rows(a, d.n, d.n), parse_rows(b, d.n, d.m), parse_rows(c, d.l, d.n), {}, {}};
    auto note = [](std::vector<std::string>& list, const std::string& tok) {
        if (std::find(list.begin(), list.end(), tok) == list.end())
            list.push_back(tok);
    };
    for (const auto* m : {&t.a, &t.b, &t.c})
        for (const auto& row : *m)
            for (const auto& tok : row)
                if (is_parameter(tok))
                    note(t.parameters, tok);
    for (size_t k = 0; k < d.n; ++k)
        if (is_parameter(t.a[k][k]))
            note(t.eigen_parameters, t.a[k][k]);
    return t;
}

std::vector<Template> build_table() {
    const std::string j2 = "λ 1; 0 λ", d2 = "λ 0; 0 μ";
    const std::string j3 = "λ 1 0; 0 λ 1; 0 0 λ", j21 = "λ 1 0; 0 λ 0; 0 0 μ", d3 = "λ 0 0; 0 μ 0; 0 0 ν";
    return {
        make("d110-01", {1, 1, 0}, "λ", "1", ""),
        make("d011-01", {0, 1, 1}, "λ", "", "1"),

        make("d111-01", {1, 1, 1}, "λ", "1", "1"),
        make("d120-01", {1, 2, 0}, j2, "∅; 1", ""),
        make("d120-02", {1, 2, 0}, j2, "1; 0", ""),
        make("d120-03", {1, 2, 0}, d2, "1; 1", ""),
        make("d021-01", {0, 2, 1}, j2, "", "1 ∅"),
        make("d021-02", {0, 2, 1}, j2, "", "0 1"),
        make("d021-03", {0, 2, 1}, d2, "", "1 1"),

        make("d121-01", {1, 2, 1}, j2, "∅; 1", "1 μ"),
        make("d121-02", {1, 2, 1}, j2, "∅; 1", "0 1"),
        make("d121-03", {1, 2, 1}, j2, "1; 0", "1 ∅"),
        make("d121-04", {1, 2, 1}, j2, "1; 0", "0 1"),
        make("d121-05", {1, 2, 1}, d2, "1; 1", "1 ν"),
        make("d121-06", {1, 2, 1}, d2, "1; 1", "0 1"),
        make("d121-07", {1, 2, 1}, d2, "0; 1", "1 1"),
        make("d121-08", {1, 2, 1}, d2, "1; 0", "1 1"),
        make("d130-01", {1, 3, 0}, j3, "∅; ∅; 1", ""),
        make("d130-02", {1, 3, 0}, j3, "∅; 1; 0", ""),
        make("d130-03", {1, 3, 0}, j3, "1; 0; 0", ""),
        make("d130-04", {1, 3, 0}, j21, "∅; 1; 1", ""),
        make("d130-05", {1, 3, 0}, j21, "1; 0; 1", ""),
        make("d130-06", {1, 3, 0}, d3, "1; 1; 1", ""),
        make("d031-01", {0, 3, 1}, j3, "", "1 ∅ ∅"),
        make("d031-02", {0, 3, 1}, j3, "", "0 1 ∅"),
        make("d031-03", {0, 3, 1}, j3, "", "0 0 1"),
        make("d031-04", {0, 3, 1}, j21, "", "1 ∅ 1"),
        make("d031-05", {0, 3, 1}, j21, "", "0 1 1"),
        make("d031-06", {0, 3, 1}, d3, "", "1 1 1"),
        make("d220-01", {2, 2, 0}, j2, "1 ∅; 0 1", ""),
        make("d022-01", {0, 2, 2}, j2, "", "1 ∅; 0 1"),
    };
}

ExactMatrix fill(const TemplateMatrix& t, size_t rows, size_t cols, const ParamBinding& params) {
    ExactMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
            const std::string& tok = t[r][c];
            if (tok == "0" || tok == kEmpty)
                continue;
            if (tok == "1")
                m(r, c) = Scalar(1);
            else
                m(r, c) = params.at(tok);
        }
    return m;
}

CanonicalSystem canonical_or_trivial(const SystemTriple& s) {
    return s.dims().n == 0 ? trivial_canonical(s.dims()) : canonicalize(s);
}

std::vector<Scalar> distinct_entries(const SystemTriple& s) {
    std::set<Scalar> seen;
    for (const ExactMatrix* m : {&s.a, &s.b, &s.c})
        for (const auto& e : m->entries())
            seen.insert(e);
    return {seen.begin(), seen.end()};
}

// Calls visit on every binding of t's parameters to values from pool, in
// lexicographic order, until visit returns true.
template <class Visit>
bool for_each_binding(const Template& t, const std::vector<Scalar>& pool, Visit visit) {
    const size_t k = t.parameters.size();
    std::vector<size_t> idx(k, 0);
    if (k > 0 && pool.empty())
        return false;
    while (true) {
        ParamBinding b;
        for (size_t j = 0; j < k; ++j)
            b[t.parameters[j]] = pool[idx[j]];
        if (visit(b))
            return true;
        size_t j = k;
        while (j > 0 && ++idx[j - 1] == pool.size())
            idx[--j] = 0;
        if (j == 0)
            return false;
    }
}

std::string binding_string(const ParamBinding& p) {
    std::string out;
    for (const auto& [name, v] : p)
        out += (out.empty() ? "" : ", ") + name + "=" + to_string(v);
    return out;
}

} // namespace

const std::vector<Template>& templates() {
    static const std::vector<Template> table = build_table();
    return table;
}

std::vector<Template> templates(size_t max_total_dim) {
    if (max_total_dim > 4)
        throw Error(ErrorKind::Unsupported, "the catalog covers |d| <= 4 only");
    std::vector<Template> out;
    for (const auto& t : templates())
        if (t.d.total() <= max_total_dim)
            out.push_back(t);
    return out;
}

const Template* find_template(const std::string& id) {
    for (const auto& t : templates())
        if (t.id == id)
            return &t;
    return nullptr;
}

SystemTriple instantiate(const Template& t, const ParamBinding& params) {
    for (const auto& p : t.parameters)
        if (!params.count(p))
            throw Error(ErrorKind::UnboundParam, t.id + " needs a value for " + p);
    for (size_t i = 0; i < t.eigen_parameters.size(); ++i)
        for (size_t j = i + 1; j < t.eigen_parameters.size(); ++j)
            if (params.at(t.eigen_parameters[i]) == params.at(t.eigen_parameters[j]))
                throw Error(ErrorKind::ParamsNotDistinct,
                            t.id + ": " + t.eigen_parameters[i] + " and " + t.eigen_parameters[j] + " coincide");
    return SystemTriple(fill(t.a, t.d.n, t.d.n, params), fill(t.b, t.d.n, t.d.m, params),
                        fill(t.c, t.d.l, t.d.n, params));
}

std::optional<TemplateMatch> match_template(const CanonicalSystem& c) {
    const SystemTriple& s = c.canonical;
    const DimensionVector d = s.dims();
    if (d == DimensionVector{1, 0, 0})
        return TemplateMatch{"vertex-1", {}};
    if (d == DimensionVector{0, 0, 1})
        return TemplateMatch{"vertex-3", {}};
    if (d.m == 0 && d.l == 0 && d.n > 0) {
        if (c.trace.empty() || c.trace.front().kind != BlockKind::WeyrBlock)
            return std::nullopt;
        const auto& blocks = c.trace.front().structure.blocks;
        if (blocks.size() == 1 && blocks.front().partition.size() == 1)
            return TemplateMatch{"jordan-" + std::to_string(d.n), {{"λ", blocks.front().eigenvalue}}};
        return std::nullopt;
    }
    if (d.total() > 4)
        return std::nullopt;

    const auto pool = distinct_entries(s);
    std::optional<TemplateMatch> found;
    // Table entries are fixed points when their eigenvalue parameters are
    // increasing, so a direct comparison settles most cases.
    for (bool reduce : {false, true}) {
        for (const auto& t : templates()) {
            if (t.d != d)
                continue;
            for_each_binding(t, pool, [&](const ParamBinding& b) {
                try {
                    SystemTriple inst = instantiate(t, b);
                    if ((reduce ? canonicalize(inst).canonical : inst) == s) {
                        found = TemplateMatch{t.id, b};
                        return true;
                    }
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::ParamsNotDistinct)
                        throw;
                }
                return false;
            });
            if (found)
                return found;
        }
    }
    return std::nullopt;
}

bool CatalogReport::ok() const {
    return fixed_point_failures.empty() && indecomposability_failures.empty() && unmatched.empty() &&
           multiset_mismatches.empty() && criterion_disagreements.empty() && errors.empty();
}

std::vector<ParamBinding> standard_parameter_sets() {
    return {
        {{"λ", Scalar(0)}, {"μ", Scalar(1)}, {"ν", Scalar(2)}},
        {{"λ", Scalar(-1)}, {"μ", Scalar(Rational(1, 2))}, {"ν", Scalar(Rational(3), Rational(1))}},
    };
}

void check_templates(std::span<const Template> ts, CatalogReport& report, Execution mode) {
    const auto sets = standard_parameter_sets();
    struct Outcome {
        std::vector<std::string> fixed, indec, errors;
        size_t criteria = 0;
        std::vector<std::string> disagree;
    };
    std::vector<Outcome> outcomes(ts.size() * sets.size());
    for_each_index(
        outcomes.size(),
        [&](size_t k) {
            const Template& t = ts[k / sets.size()];
            const ParamBinding& params = sets[k % sets.size()];
            Outcome& o = outcomes[k];
            const std::string label = t.id + " at " + binding_string(params);
            try {
                SystemTriple s = instantiate(t, params);
                CanonicalSystem c = canonicalize(s);
                if (c.canonical != s)
                    o.fixed.push_back(label + ": canonical form is " + describe(c.canonical));
                const bool by_links = is_indecomposable_by_links(c);
                const bool by_ring = is_indecomposable_by_local_ring(s);
                ++o.criteria;
                if (by_links != by_ring)
                    o.disagree.push_back(label + ": links say " + (by_links ? "yes" : "no") + ", local ring says " +
                                         (by_ring ? "yes" : "no"));
                if (!by_links || !by_ring)
                    o.indec.push_back(label + ": not indecomposable (links " + std::to_string(link_count(c)) + ")");
            } catch (const std::exception& e) {
                o.errors.push_back(label + ": " + e.what());
            }
        },
        mode);
    for (auto& o : outcomes) {
        ++report.fixed_point_checks;
        report.criterion_checks += o.criteria;
        for (auto& s : o.fixed)
            report.fixed_point_failures.push_back(std::move(s));
        for (auto& s : o.indec)
            report.indecomposability_failures.push_back(std::move(s));
        for (auto& s : o.disagree)
            report.criterion_disagreements.push_back(std::move(s));
        for (auto& s : o.errors)
            report.errors.push_back(std::move(s));
    }
}

CatalogReport verify_catalog(size_t trials, std::uint64_t seed, Execution mode) {
    CatalogReport report;
    check_templates(templates(), report, mode);

    struct Outcome {
        size_t summands = 0;
        size_t criteria = 0;
        std::vector<std::string> unmatched, mismatch, disagree, errors;
    };
    std::vector<Outcome> outcomes(trials);
    for_each_index(
        trials,
        [&](size_t k) {
            Outcome& o = outcomes[k];
            Rng rng = make_rng(seed, k);
            const DimensionVector d = random_dims(rng, 1, 4, 0);
            const std::string label = "trial " + std::to_string(k) + " d=" + to_string(d);
            try {
                const SystemTriple s = random_system(rng, d);
                const auto whole = canonical_or_trivial(s);
                ++o.criteria;
                if (is_indecomposable_by_links(whole) != is_indecomposable_by_local_ring(s))
                    o.disagree.push_back(label + ": criteria disagree on " + describe(s));
                const auto parts = decompose(s);
                for (const auto& part : parts) {
                    ++o.summands;
                    ++o.criteria;
                    const bool by_links = is_indecomposable_by_links(part);
                    if (by_links != is_indecomposable_by_local_ring(part.canonical))
                        o.disagree.push_back(label + ": criteria disagree on summand " + describe(part.canonical));
                    if (!match_template(part))
                        o.unmatched.push_back(label + ": summand " + describe(part.canonical));
                }
                const auto again = decompose(apply_group(random_group_element(rng, d), s));
                bool same = again.size() == parts.size();
                for (size_t i = 0; same && i < parts.size(); ++i)
                    same = again[i].canonical == parts[i].canonical;
                if (!same)
                    o.mismatch.push_back(label + ": summands change under conjugation of " + describe(s));
            } catch (const std::exception& e) {
                o.errors.push_back(label + ": " + e.what());
            }
        },
        mode);
    report.trials = trials;
    for (auto& o : outcomes) {
        report.summands_checked += o.summands;
        report.criterion_checks += o.criteria;
        for (auto& s : o.unmatched)
            report.unmatched.push_back(std::move(s));
        for (auto& s : o.mismatch)
            report.multiset_mismatches.push_back(std::move(s));
        for (auto& s : o.disagree)
            report.criterion_disagreements.push_back(std::move(s));
        for (auto& s : o.errors)
            report.errors.push_back(std::move(s));
    }
    return report;
}

} // namespace belitskii
