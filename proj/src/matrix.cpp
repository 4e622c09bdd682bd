#include "belitskii/matrix.hpp"

#include <ostream>
#include <utility>

#include "belitskii/error.hpp"

namespace belitskii {

ExactMatrix::ExactMatrix(size_t rows, size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw Error(ErrorKind::SizeMismatch, "entry count does not match shape");
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw Error(ErrorKind::SizeMismatch, "ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ExactMatrix ExactMatrix::identity(size_t n) { return scalar(n, Scalar(1)); }

ExactMatrix ExactMatrix::scalar(size_t n, const Scalar& s) {
    ExactMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        m(i, i) = s;
    return m;
}

ExactMatrix ExactMatrix::direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, a.cols_, b);
    return m;
}

ExactMatrix ExactMatrix::from_columns(size_t rows, std::span<const std::vector<Scalar>> columns) {
    ExactMatrix m(rows, columns.size());
    for (size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw Error(ErrorKind::SizeMismatch, "column length mismatch");
        for (size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero())
            return false;
    return true;
}

bool ExactMatrix::is_identity() const {
    if (!is_square())
        return false;
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != Scalar(r == c ? 1 : 0))
                return false;
    return true;
}

ExactMatrix ExactMatrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw Error(ErrorKind::SizeMismatch, "block out of range");
    ExactMatrix b(nr, nc);
    for (size_t r = 0; r < nr; ++r)
        for (size_t c = 0; c < nc; ++c)
            b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void ExactMatrix::set_block(size_t r0, size_t c0, const ExactMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw Error(ErrorKind::SizeMismatch, "block out of range");
    for (size_t r = 0; r < b.rows_; ++r)
        for (size_t c = 0; c < b.cols_; ++c)
            (*this)(r0 + r, c0 + c) = b(r, c);
}

ExactMatrix ExactMatrix::submatrix(std::span<const size_t> ri, std::span<const size_t> ci) const {
    ExactMatrix s(ri.size(), ci.size());
    for (size_t r = 0; r < ri.size(); ++r)
        for (size_t c = 0; c < ci.size(); ++c)
            s(r, c) = (*this)(ri[r], ci[c]);
    return s;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

std::vector<Scalar> ExactMatrix::column(size_t c) const {
    std::vector<Scalar> v(rows_);
    for (size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::SizeMismatch, "matrix addition");
    for (size_t k = 0; k < data_.size(); ++k)
        data_[k] += o.data_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::SizeMismatch, "matrix subtraction");
    for (size_t k = 0; k < data_.size(); ++k)
        data_[k] -= o.data_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Scalar& s) {
    for (auto& e : data_)
        e *= s;
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_)
        throw Error(ErrorKind::SizeMismatch, "matrix product");
    ExactMatrix p(a.rows_, b.cols_);
    for (size_t r = 0; r < a.rows_; ++r)
        for (size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero())
                continue;
            for (size_t c = 0; c < b.cols_; ++c) {
                const Scalar& y = b(k, c);
                if (!y.is_zero())
                    p(r, c) += x * y;
            }
        }
    return p;
}

std::vector<Scalar> ExactMatrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_)
        throw Error(ErrorKind::SizeMismatch, "matrix-vector product");
    std::vector<Scalar> out(rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            if (!v[c].is_zero() && !(*this)(r, c).is_zero())
                out[r] += (*this)(r, c) * v[c];
    return out;
}

Scalar ExactMatrix::trace() const {
    if (!is_square())
        throw Error(ErrorKind::SizeMismatch, "trace of non-square matrix");
    Scalar t;
    for (size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

ExactMatrix ExactMatrix::power(unsigned k) const {
    if (!is_square())
        throw Error(ErrorKind::SizeMismatch, "power of non-square matrix");
    ExactMatrix result = identity(rows_);
    for (unsigned i = 0; i < k; ++i)
        result = result * *this;
    return result;
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
    os << '[';
    for (size_t r = 0; r < m.rows(); ++r) {
        os << (r ? "; " : "");
        for (size_t c = 0; c < m.cols(); ++c)
            os << (c ? " " : "") << m(r, c);
    }
    return os << ']';
}

RrefResult rref(const ExactMatrix& m) {
    const size_t rows = m.rows(), cols = m.cols();
    ExactMatrix r = m;
    ExactMatrix t = ExactMatrix::identity(rows);
    std::vector<size_t> pivots;
    size_t lead = 0;
    for (size_t c = 0; c < cols && lead < rows; ++c) {
        size_t p = lead;
        while (p < rows && r(p, c).is_zero())
            ++p;
        if (p == rows)
            continue;
        if (p != lead)
            for (size_t k = 0; k < cols; ++k)
                std::swap(r(p, k), r(lead, k));
        if (p != lead)
            for (size_t k = 0; k < rows; ++k)
                std::swap(t(p, k), t(lead, k));
        Scalar inv = r(lead, c).inverse();
        for (size_t k = 0; k < cols; ++k)
            if (!r(lead, k).is_zero())
                r(lead, k) *= inv;
        for (size_t k = 0; k < rows; ++k)
            if (!t(lead, k).is_zero())
                t(lead, k) *= inv;
        for (size_t q = 0; q < rows; ++q) {
            if (q == lead || r(q, c).is_zero())
                continue;
            Scalar f = r(q, c);
            for (size_t k = 0; k < cols; ++k)
                if (!r(lead, k).is_zero())
                    r(q, k) -= f * r(lead, k);
            for (size_t k = 0; k < rows; ++k)
                if (!t(lead, k).is_zero())
                    t(q, k) -= f * t(lead, k);
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(r), std::move(pivots), std::move(t)};
}

namespace {

// Row reduction without tracking the transform; rank/nullspace don't need it.
std::pair<ExactMatrix, std::vector<size_t>> reduce_rows(ExactMatrix r) {
    const size_t rows = r.rows(), cols = r.cols();
    std::vector<size_t> pivots;
    size_t lead = 0;
    for (size_t c = 0; c < cols && lead < rows; ++c) {
        size_t p = lead;
        while (p < rows && r(p, c).is_zero())
            ++p;
        if (p == rows)
            continue;
        if (p != lead)
            for (size_t k = c; k < cols; ++k)
                std::swap(r(p, k), r(lead, k));
        Scalar inv = r(lead, c).inverse();
        for (size_t k = c; k < cols; ++k)
            if (!r(lead, k).is_zero())
                r(lead, k) *= inv;
        for (size_t q = 0; q < rows; ++q) {
            if (q == lead || r(q, c).is_zero())
                continue;
            Scalar f = r(q, c);
            for (size_t k = c; k < cols; ++k)
                if (!r(lead, k).is_zero())
                    r(q, k) -= f * r(lead, k);
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(r), std::move(pivots)};
}

} // namespace

size_t rank(const ExactMatrix& m) { return reduce_rows(m).second.size(); }

std::vector<size_t> free_columns(const ExactMatrix& m) {
    auto pivots = reduce_rows(m).second;
    std::vector<size_t> out;
    size_t p = 0;
    for (size_t c = 0; c < m.cols(); ++c) {
        if (p < pivots.size() && pivots[p] == c)
            ++p;
        else
            out.push_back(c);
    }
    return out;
}

std::vector<std::vector<Scalar>> nullspace(const ExactMatrix& m) {
    auto [r, pivots] = reduce_rows(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Scalar> v(m.cols());
        v[f] = Scalar(1);
        for (size_t i = 0; i < pivots.size(); ++i)
            if (!r(i, f).is_zero())
                v[pivots[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

ExactMatrix invert(const ExactMatrix& m) {
    if (!m.is_square())
        throw Error(ErrorKind::SizeMismatch, "inverse of non-square matrix");
    auto res = rref(m);
    if (res.pivots.size() != m.rows())
        throw Error(ErrorKind::Singular, "matrix is not invertible");
    return std::move(res.transform);
}

bool solve(const ExactMatrix& m, std::span<const Scalar> b, std::vector<Scalar>& x) {
    if (b.size() != m.rows())
        throw Error(ErrorKind::SizeMismatch, "right-hand side length");
    ExactMatrix aug(m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (size_t r = 0; r < m.rows(); ++r)
        aug(r, m.cols()) = b[r];
    auto [r, pivots] = reduce_rows(std::move(aug));
    if (!pivots.empty() && pivots.back() == m.cols())
        return false;
    x.assign(m.cols(), Scalar());
    for (size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = r(i, m.cols());
    return true;
}

ExactMatrix commutant_map(const ExactMatrix& a) {
    if (!a.is_square())
        throw Error(ErrorKind::SizeMismatch, "commutant_map needs a square matrix");
    const size_t n = a.rows();
    ExactMatrix map(n * n, n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const size_t out = i * n + j;
            for (size_t k = 0; k < n; ++k) {
                // (Y A)_{ij} = sum_k Y_{ik} A_{kj}
                if (!a(k, j).is_zero())
                    map(out, i * n + k) += a(k, j);
                // (A Y)_{ij} = sum_k A_{ik} Y_{kj}
                if (!a(i, k).is_zero())
                    map(out, k * n + j) -= a(i, k);
            }
        }
    return map;
}

} // namespace belitskii
