#include "belitskii/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "belitskii/error.hpp"

namespace belitskii {

size_t sigma_of_block(const ReducedBlock& b) {
    switch (b.kind) {
    case BlockKind::Empty: return b.rows * b.cols;
    case BlockKind::EdgeIdentity: return b.rank * (b.rows + b.cols - b.rank);
    case BlockKind::WeyrBlock: return b.rows * b.rows - centralizer_dim(b.structure);
    }
    return 0;
}

OrbitInfo orbit_dimension(const CanonicalSystem& c) {
    const DimensionVector d = c.canonical.dims();
    OrbitInfo info;
    info.dim_group = d.m * d.m + d.n * d.n + d.l * d.l;
    info.dim_system_space = d.m * d.n + d.n * d.n + d.l * d.n;
    for (const auto& b : c.trace)
        info.dim_orbit += sigma_of_block(b);
    if (info.dim_orbit > info.dim_group)
        throw Error(ErrorKind::Internal, "orbit dimension exceeds group dimension");
    info.dim_stabilizer = info.dim_group - info.dim_orbit;
    if (info.dim_stabilizer != c.final_stabilizer.dimension())
        throw Error(ErrorKind::Internal, "sigma sum disagrees with the tracked stabilizer dimension");
    return info;
}

ExactMatrix tangent_map(const SystemTriple& s) {
    const DimensionVector d = s.dims();
    const size_t m = d.m, n = d.n, l = d.l;
    const size_t ox = 0, oy = m * m, oz = m * m + n * n;
    const size_t ra = 0, rb = n * n, rc = n * n + n * m;
    ExactMatrix t(n * n + n * m + l * n, m * m + n * n + l * l);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                t(ra + i * n + j, oy + i * n + k) += s.a(k, j);
                t(ra + i * n + j, oy + k * n + j) -= s.a(i, k);
            }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) {
            for (size_t k = 0; k < n; ++k)
                t(rb + i * m + j, oy + i * n + k) += s.b(k, j);
            for (size_t k = 0; k < m; ++k)
                t(rb + i * m + j, ox + k * m + j) -= s.b(i, k);
        }
    for (size_t i = 0; i < l; ++i)
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < l; ++k)
                t(rc + i * n + j, oz + i * l + k) += s.c(k, j);
            for (size_t k = 0; k < n; ++k)
                t(rc + i * n + j, oy + k * n + j) -= s.c(i, k);
        }
    return t;
}

size_t orbit_dimension_oracle(const SystemTriple& s) { return rank(tangent_map(s)); }

namespace {

GroupElement triple_from_coordinates(DimensionVector d, const std::vector<Scalar>& v) {
    GroupElement g{ExactMatrix(d.m, d.m), ExactMatrix(d.n, d.n), ExactMatrix(d.l, d.l)};
    size_t k = 0;
    for (ExactMatrix* part : {&g.x, &g.y, &g.z})
        for (size_t r = 0; r < part->rows(); ++r)
            for (size_t c = 0; c < part->cols(); ++c)
                (*part)(r, c) = v[k++];
    return g;
}

std::vector<Scalar> triple_coordinates(const GroupElement& g) {
    std::vector<Scalar> out;
    for (const ExactMatrix* part : {&g.x, &g.y, &g.z})
        out.insert(out.end(), part->entries().begin(), part->entries().end());
    return out;
}

class UnionFind {
public:
    explicit UnionFind(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), size_t{0}); }
    size_t find(size_t x) {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<size_t> parent_;
};

// Graph nodes: X coordinates, then Y, then Z.
struct RegionNodes {
    size_t row_offset;
    size_t col_offset;
};

RegionNodes region_nodes(DimensionVector d, Region r) {
    switch (r) {
    case Region::A: return {d.m, d.m};
    case Region::B: return {d.m, 0};
    case Region::C: return {d.m + d.n, d.m};
    }
    return {0, 0};
}

const ExactMatrix& region_of(const SystemTriple& s, Region r) {
    return r == Region::A ? s.a : r == Region::B ? s.b : s.c;
}

bool lex_less(const ExactMatrix& a, const ExactMatrix& b) {
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(), b.entries().begin(),
                                        b.entries().end());
}

} // namespace

std::vector<GroupElement> endomorphism_basis(const SystemTriple& s) {
    std::vector<GroupElement> out;
    for (const auto& v : nullspace(tangent_map(s)))
        out.push_back(triple_from_coordinates(s.dims(), v));
    return out;
}

bool is_indecomposable_by_local_ring(const SystemTriple& s) {
    const ExactMatrix t = tangent_map(s);
    const auto basis = nullspace(t);
    const auto free = free_columns(t);
    const size_t k = basis.size();
    if (k == 0)
        return false;
    const DimensionVector d = s.dims();
    std::vector<GroupElement> elems;
    for (const auto& v : basis)
        elems.push_back(triple_from_coordinates(d, v));

    // c[a][b][j]: coordinate j of E_a E_b, read off the free columns.
    std::vector<std::vector<std::vector<Scalar>>> c(k, std::vector<std::vector<Scalar>>(k));
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b) {
            auto prod = triple_coordinates(elems[a] * elems[b]);
            c[a][b].reserve(k);
            for (size_t j = 0; j < k; ++j)
                c[a][b].push_back(prod[free[j]]);
        }
    std::vector<Scalar> tau(k);
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b)
            tau[a] += c[a][b][b];
    ExactMatrix form(k, k);
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b)
            for (size_t j = 0; j < k; ++j)
                if (!c[a][b][j].is_zero())
                    form(a, b) += c[a][b][j] * tau[j];
    // dim End - dim rad = rank of the trace form.
    return rank(form) == 1;
}

size_t link_count(const CanonicalSystem& c) {
    size_t links = 0;
    for (const auto& b : c.trace) {
        if (b.kind == BlockKind::EdgeIdentity)
            links += b.rank;
        else if (b.kind == BlockKind::WeyrBlock)
            for (const auto& blk : b.structure.blocks)
                for (size_t q : blk.partition)
                    links += q - 1;
    }
    return links;
}

bool is_indecomposable_by_links(const CanonicalSystem& c) {
    const size_t total = c.canonical.dims().total();
    return total > 0 && link_count(c) == total - 1;
}

CanonicalSystem trivial_canonical(DimensionVector d) {
    if (d.n != 0)
        throw Error(ErrorKind::Internal, "trivial_canonical expects n = 0");
    return {SystemTriple::zero(d), GroupElement::identity(d), {}, StabilizerDescription::full(d)};
}

bool summand_less(const SystemTriple& a, const SystemTriple& b) {
    if (a.dims() != b.dims())
        return a.dims() < b.dims();
    if (a.a != b.a)
        return lex_less(a.a, b.a);
    if (a.b != b.b)
        return lex_less(a.b, b.b);
    return lex_less(a.c, b.c);
}

std::vector<CanonicalSystem> decompose(const SystemTriple& s) {
    const DimensionVector d = s.dims();
    std::vector<CanonicalSystem> out;
    if (d.n == 0) {
        for (size_t k = 0; k < d.m; ++k)
            out.push_back(trivial_canonical({1, 0, 0}));
        for (size_t k = 0; k < d.l; ++k)
            out.push_back(trivial_canonical({0, 0, 1}));
        return out;
    }

    const CanonicalSystem whole = canonicalize(s);
    const SystemTriple& canon = whole.canonical;
    UnionFind uf(d.total());
    for (const auto& b : whole.trace) {
        const BlockLocation& loc = b.location;
        const RegionNodes nodes = region_nodes(d, loc.region);
        const ExactMatrix& m = region_of(canon, loc.region);
        if (b.kind == BlockKind::EdgeIdentity) {
            for (size_t i = 0; i < b.rank; ++i)
                uf.unite(nodes.row_offset + loc.row_begin + i, nodes.col_offset + loc.col_end - b.rank + i);
        } else if (b.kind == BlockKind::WeyrBlock) {
            for (size_t r = loc.row_begin; r < loc.row_end; ++r)
                for (size_t col = loc.col_begin; col < loc.col_end; ++col)
                    if (r - loc.row_begin != col - loc.col_begin && !m(r, col).is_zero())
                        uf.unite(nodes.row_offset + r, nodes.col_offset + col);
        }
    }
    for (Region r : {Region::A, Region::B, Region::C}) {
        const RegionNodes nodes = region_nodes(d, r);
        const ExactMatrix& m = region_of(canon, r);
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_zero() && uf.find(nodes.row_offset + i) != uf.find(nodes.col_offset + j))
                    throw Error(ErrorKind::Internal, "canonical entry couples two link components");
    }

    std::map<size_t, std::vector<size_t>> components;
    for (size_t v = 0; v < d.total(); ++v)
        components[uf.find(v)].push_back(v);
    for (const auto& [root, nodes] : components) {
        std::vector<size_t> xs, ys, zs;
        for (size_t v : nodes) {
            if (v < d.m)
                xs.push_back(v);
            else if (v < d.m + d.n)
                ys.push_back(v - d.m);
            else
                zs.push_back(v - d.m - d.n);
        }
        SystemTriple part(canon.a.submatrix(ys, ys), canon.b.submatrix(ys, xs), canon.c.submatrix(zs, ys));
        if (part.dims().n == 0)
            out.push_back(trivial_canonical(part.dims()));
        else
            out.push_back(canonicalize(part));
    }
    std::sort(out.begin(), out.end(),
              [](const CanonicalSystem& x, const CanonicalSystem& y) { return summand_less(x.canonical, y.canonical); });
    return out;
}

} // namespace belitskii
