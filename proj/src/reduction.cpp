#include "belitskii/reduction.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "belitskii/error.hpp"

namespace belitskii {

const char* to_string(Region r) {
    switch (r) {
    case Region::A: return "A";
    case Region::B: return "B";
    case Region::C: return "C";
    }
    return "?";
}

const char* to_string(BlockKind k) {
    switch (k) {
    case BlockKind::Empty: return "Empty";
    case BlockKind::EdgeIdentity: return "EdgeIdentity";
    case BlockKind::WeyrBlock: return "WeyrBlock";
    }
    return "?";
}

namespace {

size_t space_dim(DimensionVector d, Space s) {
    switch (s) {
    case Space::X: return d.m;
    case Space::Y: return d.n;
    case Space::Z: return d.l;
    }
    return 0;
}

size_t space_offset(DimensionVector d, Space s) {
    switch (s) {
    case Space::X: return 0;
    case Space::Y: return d.m * d.m;
    case Space::Z: return d.m * d.m + d.n * d.n;
    }
    return 0;
}

const ExactMatrix& space_matrix(const GroupElement& g, Space s) {
    switch (s) {
    case Space::X: return g.x;
    case Space::Y: return g.y;
    case Space::Z: return g.z;
    }
    return g.y;
}

ExactMatrix& space_matrix(GroupElement& g, Space s) {
    switch (s) {
    case Space::X: return g.x;
    case Space::Y: return g.y;
    case Space::Z: return g.z;
    }
    return g.y;
}

Space row_space(Region r) { return r == Region::C ? Space::Z : Space::Y; }
Space col_space(Region r) { return r == Region::B ? Space::X : Space::Y; }

const ExactMatrix& region_matrix(const SystemTriple& s, Region r) {
    switch (r) {
    case Region::A: return s.a;
    case Region::B: return s.b;
    case Region::C: return s.c;
    }
    return s.a;
}

std::vector<Scalar> vectorize(const ExactMatrix& m) { return m.entries(); }

std::vector<Scalar> combine(const std::vector<std::vector<Scalar>>& vectors, std::span<const Scalar> coeffs,
                            size_t length) {
    std::vector<Scalar> out(length);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero())
            continue;
        for (size_t i = 0; i < length; ++i)
            if (!vectors[k][i].is_zero())
                out[i] += coeffs[k] * vectors[k][i];
    }
    return out;
}

} // namespace

StabilizerDescription StabilizerDescription::full(DimensionVector d) {
    StabilizerDescription s;
    s.dims_ = d;
    if (d.m > 0)
        s.strips_.push_back({Space::X, 0, d.m, 0});
    if (d.n > 0)
        s.strips_.push_back({Space::Y, 0, d.n, 1});
    if (d.l > 0)
        s.strips_.push_back({Space::Z, 0, d.l, 2});
    const size_t count = s.coordinate_count();
    s.basis_.assign(count, std::vector<Scalar>(count));
    for (size_t k = 0; k < count; ++k)
        s.basis_[k][k] = Scalar(1);
    return s;
}

GroupElement StabilizerDescription::element(std::span<const Scalar> coords) const {
    if (coords.size() != coordinate_count())
        throw Error(ErrorKind::SizeMismatch, "stabilizer coordinate vector");
    GroupElement g{ExactMatrix(dims_.m, dims_.m), ExactMatrix(dims_.n, dims_.n), ExactMatrix(dims_.l, dims_.l)};
    for (Space sp : {Space::X, Space::Y, Space::Z}) {
        const size_t dim = space_dim(dims_, sp), off = space_offset(dims_, sp);
        ExactMatrix& target = space_matrix(g, sp);
        for (size_t r = 0; r < dim; ++r)
            for (size_t c = 0; c < dim; ++c)
                target(r, c) = coords[off + r * dim + c];
    }
    return g;
}

std::vector<Scalar> StabilizerDescription::coordinates(const GroupElement& g) const {
    if (g.dims() != dims_)
        throw Error(ErrorKind::SizeMismatch, "group element does not match stabilizer");
    std::vector<Scalar> out;
    out.reserve(coordinate_count());
    for (const ExactMatrix* m : {&g.x, &g.y, &g.z})
        out.insert(out.end(), m->entries().begin(), m->entries().end());
    return out;
}

bool StabilizerDescription::contains(const GroupElement& g) const {
    const size_t count = coordinate_count();
    ExactMatrix span_matrix = ExactMatrix::from_columns(count, basis_);
    std::vector<Scalar> x;
    return solve(span_matrix, coordinates(g), x);
}

ExactMatrix edge_block(size_t rows, size_t cols, size_t r) {
    ExactMatrix e(rows, cols);
    for (size_t i = 0; i < r; ++i)
        e(i, cols - r + i) = Scalar(1);
    return e;
}

EdgeReduction edge_reduce(const ExactMatrix& m) {
    RrefResult rr = rref(m);
    const size_t r = rr.pivots.size();
    std::vector<std::vector<Scalar>> columns = nullspace(m);
    for (size_t p : rr.pivots) {
        std::vector<Scalar> e(m.cols());
        e[p] = Scalar(1);
        columns.push_back(std::move(e));
    }
    ExactMatrix k = ExactMatrix::from_columns(m.cols(), columns);
    EdgeReduction out;
    out.rank = r;
    out.block = rr.transform * m * k;
    if (out.block != edge_block(m.rows(), m.cols(), r))
        throw Error(ErrorKind::Internal, "edge reduction produced a non-canonical block");
    out.row_transform = std::move(rr.transform);
    out.col_transform = invert(k);
    return out;
}

Regularization regularize(const ExactMatrix& m, std::span<const ExactMatrix> additions) {
    const size_t len = m.rows() * m.cols();
    std::vector<std::vector<Scalar>> cols;
    for (const auto& a : additions) {
        if (a.rows() != m.rows() || a.cols() != m.cols())
            throw Error(ErrorKind::SizeMismatch, "addition shape differs from block");
        cols.push_back(vectorize(a));
    }
    ExactMatrix span_matrix = ExactMatrix::from_columns(len, cols);
    Regularization out;
    out.cleared = rank(span_matrix) == len;

    // Target: the representative of m + span with zeros in every coordinate
    // the span can reach (the pivot coordinates of its row-reduced transpose).
    RrefResult rr = rref(span_matrix.transpose());
    std::vector<Scalar> target = vectorize(m);
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
        Scalar f = target[rr.pivots[i]];
        if (f.is_zero())
            continue;
        for (size_t k = 0; k < len; ++k)
            if (!rr.reduced(i, k).is_zero())
                target[k] -= f * rr.reduced(i, k);
    }
    std::vector<Scalar> delta(len);
    const auto& orig = m.entries();
    for (size_t k = 0; k < len; ++k)
        delta[k] = target[k] - orig[k];
    if (!solve(span_matrix, delta, out.coefficients))
        throw Error(ErrorKind::Internal, "regularization target outside the additive span");
    out.block = ExactMatrix(m.rows(), m.cols(), std::move(target));
    return out;
}

WeyrDecomposition loop_reduce(const ExactMatrix& m) { return weyr_form(m); }

class Reducer {
public:
    explicit Reducer(const SystemTriple& s)
        : sys_(s), witness_(GroupElement::identity(s.dims())), stab_(StabilizerDescription::full(s.dims())) {
        const DimensionVector d = s.dims();
        done_[0].assign(d.n * d.n, 0);
        done_[1].assign(d.n * d.m, 0);
        done_[2].assign(d.l * d.n, 0);
    }

    CanonicalSystem run() {
        const DimensionVector d = sys_.dims();
        if (d.n == 0 && d.total() > 0)
            throw Error(ErrorKind::EmptyStateSpace, "systems with n = 0 have no state space to reduce");
        if (d.n > 0) {
            size_t y = strip_index(Space::Y, 0);
            reduce_box({Region::A, y, y});
        }
        for (Region r : {Region::B, Region::C})
            while (auto box = next_box(r))
                reduce_box(*box);
        return {std::move(sys_), std::move(witness_), std::move(trace_), std::move(stab_)};
    }

private:
    struct Box {
        Region region;
        size_t row_strip;
        size_t col_strip;
    };

    SystemTriple sys_;
    GroupElement witness_;
    StabilizerDescription stab_;
    std::vector<ReducedBlock> trace_;
    std::vector<char> done_[3];
    int next_class_ = 3;

    DimensionVector dims() const { return stab_.dims_; }
    std::vector<Strip>& strips() { return stab_.strips_; }

    std::vector<char>& done(Region r) { return done_[static_cast<int>(r)]; }
    bool is_done(Region r, size_t row, size_t col) {
        return done(r)[row * region_matrix(sys_, r).cols() + col] != 0;
    }

    size_t strip_index(Space sp, size_t coord) const {
        for (size_t k = 0; k < stab_.strips_.size(); ++k) {
            const Strip& s = stab_.strips_[k];
            if (s.space == sp && coord >= s.begin && coord < s.begin + s.size)
                return k;
        }
        throw Error(ErrorKind::Internal, "coordinate outside every strip");
    }

    std::vector<size_t> strips_of(Space sp, bool descending) const {
        std::vector<size_t> out;
        for (size_t k = 0; k < stab_.strips_.size(); ++k)
            if (stab_.strips_[k].space == sp)
                out.push_back(k);
        std::sort(out.begin(), out.end(), [&](size_t a, size_t b) {
            return descending ? stab_.strips_[a].begin > stab_.strips_[b].begin
                              : stab_.strips_[a].begin < stab_.strips_[b].begin;
        });
        return out;
    }

    // B: bottom row strip first, then left to right. C: left column strip
    // first, then bottom to top. Both orders respect the triangular shape of
    // the stabilizer, so the chosen box only receives additions from boxes
    // already reduced.
    std::optional<Box> next_box(Region r) {
        const DimensionVector d = dims();
        if (d.n == 0 || (r == Region::B && d.m == 0) || (r == Region::C && d.l == 0))
            return std::nullopt;
        if (r == Region::B) {
            for (size_t a : strips_of(Space::Y, true))
                for (size_t b : strips_of(Space::X, false))
                    if (!is_done(r, strips()[a].begin, strips()[b].begin))
                        return Box{r, a, b};
        } else {
            for (size_t b : strips_of(Space::Y, false))
                for (size_t a : strips_of(Space::Z, true))
                    if (!is_done(r, strips()[a].begin, strips()[b].begin))
                        return Box{r, a, b};
        }
        return std::nullopt;
    }

    ExactMatrix box_values(const Box& box) const {
        const Strip& a = stab_.strips_[box.row_strip];
        const Strip& b = stab_.strips_[box.col_strip];
        return region_matrix(sys_, box.region).block(a.begin, b.begin, a.size, b.size);
    }

    // (S_row M - M S_col) restricted to the box, for an arbitrary algebra
    // element S (not necessarily invertible).
    ExactMatrix box_map(const GroupElement& s, const Box& box) const {
        const Strip& a = stab_.strips_[box.row_strip];
        const Strip& b = stab_.strips_[box.col_strip];
        const ExactMatrix& m = region_matrix(sys_, box.region);
        const ExactMatrix& rs = space_matrix(s, row_space(box.region));
        const ExactMatrix& cs = space_matrix(s, col_space(box.region));
        return rs.block(a.begin, 0, a.size, rs.cols()) * m.block(0, b.begin, m.rows(), b.size) -
               m.block(a.begin, 0, a.size, m.cols()) * cs.block(0, b.begin, cs.rows(), b.size);
    }

    ExactMatrix constraint_matrix(const std::vector<std::vector<Scalar>>& vectors, const Box& box) const {
        const Strip& a = stab_.strips_[box.row_strip];
        const Strip& b = stab_.strips_[box.col_strip];
        std::vector<std::vector<Scalar>> cols;
        cols.reserve(vectors.size());
        for (const auto& v : vectors)
            cols.push_back(vectorize(box_map(stab_.element(v), box)));
        return ExactMatrix::from_columns(a.size * b.size, cols);
    }

    // Elements of the stabilizer algebra with vanishing diagonal strip blocks.
    std::vector<std::vector<Scalar>> off_diagonal_part() const {
        const DimensionVector d = dims();
        std::vector<size_t> diag_coords;
        for (const Strip& s : stab_.strips_) {
            const size_t dim = space_dim(d, s.space), off = space_offset(d, s.space);
            for (size_t r = 0; r < s.size; ++r)
                for (size_t c = 0; c < s.size; ++c)
                    diag_coords.push_back(off + (s.begin + r) * dim + s.begin + c);
        }
        const auto& basis = stab_.basis_;
        ExactMatrix proj(diag_coords.size(), basis.size());
        for (size_t j = 0; j < basis.size(); ++j)
            for (size_t i = 0; i < diag_coords.size(); ++i)
                proj(i, j) = basis[j][diag_coords[i]];
        std::vector<std::vector<Scalar>> out;
        for (const auto& coeffs : nullspace(proj))
            out.push_back(combine(basis, coeffs, stab_.coordinate_count()));

        // The diagonal part must be the full product of GL's over link
        // classes; otherwise the block-by-block reduction is not valid.
        std::map<int, size_t> class_size;
        for (const Strip& s : stab_.strips_)
            class_size[s.link_class] = s.size;
        size_t diag_dim = 0;
        for (const auto& [cls, size] : class_size)
            diag_dim += size * size;
        if (basis.size() - out.size() != diag_dim)
            throw Error(ErrorKind::Internal, "stabilizer diagonal part is not a product of general linear groups");
        return out;
    }

    // Every off-diagonal parameter that reaches the box must do so through
    // an already reduced box.
    void check_ready(const Box& box, const std::vector<std::vector<Scalar>>& off_diag) {
        const Strip& a = stab_.strips_[box.row_strip];
        const Strip& b = stab_.strips_[box.col_strip];
        for (const auto& v : off_diag) {
            GroupElement g = stab_.element(v);
            const ExactMatrix& rs = space_matrix(g, row_space(box.region));
            const ExactMatrix& cs = space_matrix(g, col_space(box.region));
            for (size_t r = a.begin; r < a.begin + a.size; ++r)
                for (size_t c = 0; c < rs.cols(); ++c)
                    if (!rs(r, c).is_zero() && (c < a.begin || c >= a.begin + a.size) && !is_done(box.region, c, b.begin))
                        throw Error(ErrorKind::Internal, "box receives additions from an unreduced row strip");
            for (size_t r = 0; r < cs.rows(); ++r)
                for (size_t c = b.begin; c < b.begin + b.size; ++c)
                    if (!cs(r, c).is_zero() && (r < b.begin || r >= b.begin + b.size) && !is_done(box.region, a.begin, r))
                        throw Error(ErrorKind::Internal, "box receives additions from an unreduced column strip");
        }
    }

    void apply(const GroupElement& g) {
        sys_ = apply_group(g, sys_);
        witness_ = g * witness_;
    }

    GroupElement class_transform(const std::map<int, const ExactMatrix*>& blocks) const {
        GroupElement g = GroupElement::identity(dims());
        for (const Strip& s : stab_.strips_) {
            auto it = blocks.find(s.link_class);
            if (it != blocks.end())
                space_matrix(g, s.space).set_block(s.begin, s.begin, *it->second);
        }
        return g;
    }

    void constrain(const Box& box) {
        ExactMatrix cm = constraint_matrix(stab_.basis_, box);
        std::vector<std::vector<Scalar>> next;
        for (const auto& coeffs : nullspace(cm))
            next.push_back(combine(stab_.basis_, coeffs, stab_.coordinate_count()));
        stab_.basis_ = std::move(next);
    }

    // Replaces every strip of class `cls` by consecutive parts (size, class).
    void split_class(int cls, const std::vector<std::pair<size_t, int>>& parts) {
        std::vector<Strip> out;
        for (const Strip& s : stab_.strips_) {
            if (s.link_class != cls) {
                out.push_back(s);
                continue;
            }
            size_t begin = s.begin;
            for (const auto& [size, new_class] : parts) {
                if (size == 0)
                    continue;
                out.push_back({s.space, begin, size, new_class});
                begin += size;
            }
            if (begin != s.begin + s.size)
                throw Error(ErrorKind::Internal, "strip split does not cover the strip");
        }
        std::sort(out.begin(), out.end(), [](const Strip& x, const Strip& y) {
            return x.space != y.space ? x.space < y.space : x.begin < y.begin;
        });
        stab_.strips_ = std::move(out);
    }

    void refine_edge(int row_class, int col_class, size_t p, size_t q, size_t r) {
        const int linked = next_class_++;
        split_class(row_class, {{r, linked}, {p - r, next_class_++}});
        split_class(col_class, {{q - r, next_class_++}, {r, linked}});
    }

    // Strip i of an eigenvalue's Weyr block splits into parts [w_{j+1}, w_j)
    // for j = k..i; part j is identified with part j of every other strip.
    void refine_weyr(int cls, const WeyrForm& w) {
        std::vector<std::pair<size_t, int>> parts;
        for (const auto& strips : w.strip_sizes) {
            const size_t k = strips.size();
            std::vector<int> class_of_part(k);
            for (auto& c : class_of_part)
                c = next_class_++;
            for (size_t i = 0; i < k; ++i)
                for (size_t j = k; j-- > i;) {
                    const size_t upper = strips[j];
                    const size_t lower = j + 1 < k ? strips[j + 1] : 0;
                    parts.emplace_back(upper - lower, class_of_part[j]);
                }
        }
        split_class(cls, parts);
    }

    void mark_done(Region region, const Strip& a, const Strip& b) {
        const size_t cols = region_matrix(sys_, region).cols();
        for (size_t r = a.begin; r < a.begin + a.size; ++r)
            for (size_t c = b.begin; c < b.begin + b.size; ++c)
                done(region)[r * cols + c] = 1;
    }

    void reduce_box(const Box& box) {
        const Strip a = stab_.strips_[box.row_strip];
        const Strip b = stab_.strips_[box.col_strip];
        const size_t p = a.size, q = b.size;
        const size_t dim_before = stab_.dimension();

        ReducedBlock rb;
        rb.rows = p;
        rb.cols = q;
        rb.location = {box.region, a.begin, a.begin + p, b.begin, b.begin + q};

        auto off_diag = off_diagonal_part();
        check_ready(box, off_diag);
        ExactMatrix additions = constraint_matrix(off_diag, box);
        const size_t reach = rank(additions);

        if (reach == p * q) {
            std::vector<Scalar> target = vectorize(box_values(box));
            for (auto& t : target)
                t = -t;
            std::vector<Scalar> coeffs;
            if (!solve(additions, target, coeffs))
                throw Error(ErrorKind::Internal, "full additive freedom failed to clear a block");
            GroupElement g = stab_.element(combine(off_diag, coeffs, stab_.coordinate_count()));
            g.x += ExactMatrix::identity(g.x.rows());
            g.y += ExactMatrix::identity(g.y.rows());
            g.z += ExactMatrix::identity(g.z.rows());
            apply(g);
            if (!box_values(box).is_zero())
                throw Error(ErrorKind::Internal, "regularization left a nonzero block");
            rb.kind = BlockKind::Empty;
            rb.sigma = p * q;
            constrain(box);
        } else if (reach == 0 && a.link_class == b.link_class) {
            WeyrDecomposition wd = loop_reduce(box_values(box));
            apply(class_transform({{a.link_class, &wd.transform}}));
            if (box_values(box) != wd.form.matrix)
                throw Error(ErrorKind::Internal, "loop reduction did not produce the Weyr block");
            rb.kind = BlockKind::WeyrBlock;
            rb.structure = wd.form.structure;
            rb.sigma = p * p - centralizer_dim(wd.form.structure);
            constrain(box);
            refine_weyr(a.link_class, wd.form);
        } else if (reach == 0) {
            EdgeReduction er = edge_reduce(box_values(box));
            apply(class_transform({{a.link_class, &er.row_transform}, {b.link_class, &er.col_transform}}));
            if (box_values(box) != er.block)
                throw Error(ErrorKind::Internal, "edge reduction did not produce the identity pattern");
            rb.kind = BlockKind::EdgeIdentity;
            rb.rank = er.rank;
            rb.sigma = er.rank * (p + q - er.rank);
            constrain(box);
            refine_edge(a.link_class, b.link_class, p, q, er.rank);
        } else {
            throw Error(ErrorKind::Unsupported, "block with partial additive freedom (" + std::to_string(reach) + " of " +
                                                    std::to_string(p * q) + " coordinates)");
        }

        const size_t drop = dim_before - stab_.dimension();
        if (drop != rb.sigma)
            throw Error(ErrorKind::Internal, "stabilizer dimension drop " + std::to_string(drop) +
                                                 " disagrees with sigma " + std::to_string(rb.sigma));
        mark_done(box.region, a, b);
        trace_.push_back(std::move(rb));
    }
};

CanonicalSystem canonicalize(const SystemTriple& s) { return Reducer(s).run(); }

bool are_equivalent(const SystemTriple& s1, const SystemTriple& s2) {
    if (s1.dims() != s2.dims())
        throw Error(ErrorKind::SizeMismatch, "systems have different dimension vectors");
    return canonicalize(s1).canonical == canonicalize(s2).canonical;
}

} // namespace belitskii
