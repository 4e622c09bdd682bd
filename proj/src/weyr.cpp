#include "belitskii/weyr.hpp"

#include <numeric>
#include <sstream>

#include "belitskii/error.hpp"

namespace belitskii {

size_t EigenStructure::dimension() const {
    size_t n = 0;
    for (const auto& b : blocks)
        n += std::accumulate(b.partition.begin(), b.partition.end(), size_t{0});
    return n;
}

Polynomial char_poly(const ExactMatrix& a) {
    if (!a.is_square())
        throw Error(ErrorKind::SizeMismatch, "char_poly needs a square matrix");
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
    const size_t n = a.rows();
    Polynomial c(n + 1);
    c[n] = Scalar(1);
    ExactMatrix m(n, n);
    for (size_t k = 1; k <= n; ++k) {
        m = a * m + ExactMatrix::scalar(n, c[n - k + 1]);
        c[n - k] = -(a * m).trace() / Scalar(static_cast<long>(k));
    }
    return c;
}

std::vector<Scalar> eigenvalues(const ExactMatrix& a) {
    SplitResult split = split_over_gaussian_rationals(char_poly(a));
    if (degree(split.residual) >= 1) {
        std::ostringstream msg;
        msg << "characteristic polynomial has a factor without roots in Q(i); coefficients (ascending):";
        for (const auto& c : split.residual)
            msg << ' ' << c;
        throw Error(ErrorKind::EigenvaluesNotInField, msg.str());
    }
    std::vector<Scalar> out;
    for (const auto& [r, mult] : split.roots)
        out.insert(out.end(), mult, r);
    return out;
}

std::vector<size_t> conjugate_partition(const std::vector<size_t>& p) {
    std::vector<size_t> out;
    if (p.empty())
        return out;
    const size_t largest = *std::max_element(p.begin(), p.end());
    for (size_t k = 1; k <= largest; ++k) {
        size_t count = 0;
        for (size_t part : p)
            count += part >= k ? 1 : 0;
        out.push_back(count);
    }
    return out;
}

namespace {

// Weyr characteristic w_k = dim ker N^k - dim ker N^{k-1}, stopping at the
// first zero.
std::vector<size_t> weyr_characteristic(const ExactMatrix& a, const Scalar& lambda) {
    const size_t n = a.rows();
    ExactMatrix nil = a - ExactMatrix::scalar(n, lambda);
    std::vector<size_t> w;
    ExactMatrix power = ExactMatrix::identity(n);
    size_t prev_kernel = 0;
    while (true) {
        power = power * nil;
        size_t kernel = n - rank(power);
        if (kernel == prev_kernel)
            break;
        w.push_back(kernel - prev_kernel);
        prev_kernel = kernel;
    }
    return w;
}

} // namespace

std::vector<size_t> jordan_partition(const ExactMatrix& a, const Scalar& lambda) {
    if (!a.is_square())
        throw Error(ErrorKind::SizeMismatch, "jordan_partition needs a square matrix");
    auto w = weyr_characteristic(a, lambda);
    if (w.empty())
        throw Error(ErrorKind::NotAnEigenvalue, to_string(lambda));
    return conjugate_partition(w);
}

EigenStructure eigen_structure(const ExactMatrix& a) {
    auto eig = eigenvalues(a);
    EigenStructure s;
    for (size_t k = 0; k < eig.size(); ++k) {
        if (k > 0 && eig[k] == eig[k - 1])
            continue;
        s.blocks.push_back({eig[k], jordan_partition(a, eig[k])});
    }
    return s;
}

size_t centralizer_dim(const EigenStructure& s) {
    size_t total = 0;
    for (const auto& b : s.blocks)
        for (size_t j = 0; j < b.partition.size(); ++j)
            total += (2 * j + 1) * b.partition[j];
    return total;
}

WeyrForm weyr_matrix(const EigenStructure& s) {
    WeyrForm out;
    out.structure = s;
    const size_t n = s.dimension();
    out.matrix = ExactMatrix(n, n);
    size_t offset = 0;
    for (const auto& b : s.blocks) {
        auto w = conjugate_partition(b.partition);
        size_t size = std::accumulate(w.begin(), w.end(), size_t{0});
        for (size_t k = 0; k < size; ++k)
            out.matrix(offset + k, offset + k) = b.eigenvalue;
        size_t strip = offset;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            size_t next = strip + w[i];
            for (size_t t = 0; t < w[i + 1]; ++t)
                out.matrix(strip + t, next + t) = Scalar(1);
            strip = next;
        }
        out.strip_sizes.push_back(std::move(w));
        offset += size;
    }
    return out;
}

ExactMatrix jordan_matrix(const EigenStructure& s) {
    const size_t n = s.dimension();
    ExactMatrix j(n, n);
    size_t offset = 0;
    for (const auto& b : s.blocks)
        for (size_t q : b.partition) {
            for (size_t k = 0; k < q; ++k) {
                j(offset + k, offset + k) = b.eigenvalue;
                if (k + 1 < q)
                    j(offset + k, offset + k + 1) = Scalar(1);
            }
            offset += q;
        }
    return j;
}

WeyrDecomposition weyr_form(const ExactMatrix& a) {
    if (!a.is_square())
        throw Error(ErrorKind::SizeMismatch, "weyr_form needs a square matrix");
    const size_t n = a.rows();
    EigenStructure structure = eigen_structure(a);
    std::vector<std::vector<Scalar>> basis;
    basis.reserve(n);

    for (const auto& blk : structure.blocks) {
        const ExactMatrix nil = a - ExactMatrix::scalar(n, blk.eigenvalue);
        const size_t depth = blk.partition.front();
        std::vector<ExactMatrix> powers{ExactMatrix::identity(n)};
        for (size_t k = 1; k <= depth; ++k)
            powers.push_back(powers.back() * nil);

        // Chain tops by decreasing level; chain c at level t spans
        // N^{t-1} v, ..., N v, v.
        struct Chain {
            std::vector<Scalar> top;
            size_t length;
        };
        std::vector<Chain> chains;
        for (size_t level = depth; level >= 1; --level) {
            std::vector<std::vector<Scalar>> spanned = nullspace(powers[level - 1]);
            for (const auto& c : chains)
                spanned.push_back(powers[c.length - level].apply(c.top));
            size_t current = rank(ExactMatrix::from_columns(n, spanned));
            for (auto& cand : nullspace(powers[level])) {
                spanned.push_back(cand);
                size_t r = rank(ExactMatrix::from_columns(n, spanned));
                if (r > current) {
                    current = r;
                    chains.push_back({cand, level});
                } else {
                    spanned.pop_back();
                }
            }
        }
        // Weyr order: strip i holds the i-th vector of every chain of length >= i.
        for (size_t i = 1; i <= depth; ++i)
            for (const auto& c : chains)
                if (c.length >= i)
                    basis.push_back(powers[c.length - i].apply(c.top));
    }

    ExactMatrix p = ExactMatrix::from_columns(n, basis);
    ExactMatrix y = invert(p);
    WeyrForm form = weyr_matrix(structure);
    if (y * a * p != form.matrix)
        throw Error(ErrorKind::Internal, "Weyr conjugation identity failed");
    return {std::move(form), std::move(y)};
}

JordanPresentation jordan_presentation(const WeyrForm& w) {
    const size_t n = w.matrix.rows();
    ExactMatrix perm(n, n);
    size_t offset = 0;
    for (size_t b = 0; b < w.structure.blocks.size(); ++b) {
        const auto& partition = w.structure.blocks[b].partition;
        const auto& strips = w.strip_sizes[b];
        std::vector<size_t> chain_start(partition.size());
        for (size_t c = 1; c < partition.size(); ++c)
            chain_start[c] = chain_start[c - 1] + partition[c - 1];
        size_t weyr_index = offset;
        for (size_t i = 0; i < strips.size(); ++i)
            for (size_t c = 0; c < strips[i]; ++c)
                perm(offset + chain_start[c] + i, weyr_index++) = Scalar(1);
        offset = weyr_index;
    }
    ExactMatrix j = perm * w.matrix * perm.transpose();
    return {std::move(perm), std::move(j)};
}

} // namespace belitskii
