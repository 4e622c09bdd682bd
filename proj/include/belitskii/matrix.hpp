#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "belitskii/scalar.hpp"

namespace belitskii {

/// Dense row-major matrix over Q(i). Zero-row and zero-column matrices are
/// legal and behave as the empty linear maps they represent.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    ExactMatrix(size_t rows, size_t cols, std::vector<Scalar> entries);
    /// Small literal matrices, mostly for tests: {{1, 2}, {0, 1}}.
    ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static ExactMatrix identity(size_t n);
    static ExactMatrix scalar(size_t n, const Scalar& s);
    /// Block-diagonal direct sum.
    static ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);
    /// The matrix whose columns are the given vectors (all of length `rows`).
    static ExactMatrix from_columns(size_t rows, std::span<const std::vector<Scalar>> columns);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Scalar>& entries() const { return data_; }

    bool is_zero() const;
    bool is_identity() const;

    ExactMatrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
    void set_block(size_t r0, size_t c0, const ExactMatrix& b);
    /// Rows `ri` and columns `ci` (in the given order).
    ExactMatrix submatrix(std::span<const size_t> ri, std::span<const size_t> ci) const;
    ExactMatrix transpose() const;
    std::vector<Scalar> column(size_t c) const;

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    ExactMatrix& operator*=(const Scalar& s);

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const Scalar& s) { return a *= s; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

    std::vector<Scalar> apply(std::span<const Scalar> v) const;
    Scalar trace() const;
    ExactMatrix power(unsigned k) const;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

struct RrefResult {
    ExactMatrix reduced;          ///< R, reduced row echelon form
    std::vector<size_t> pivots;   ///< pivot columns, increasing
    ExactMatrix transform;        ///< T, invertible, T * M == R
};

RrefResult rref(const ExactMatrix& m);
size_t rank(const ExactMatrix& m);
/// Basis of {v : M v = 0}. Vector k has a 1 in the k-th free column and 0 in
/// every other free column, so coordinates w.r.t. this basis can be read off
/// the free columns directly.
std::vector<std::vector<Scalar>> nullspace(const ExactMatrix& m);
/// Free (non-pivot) columns in the order nullspace() uses them.
std::vector<size_t> free_columns(const ExactMatrix& m);
ExactMatrix invert(const ExactMatrix& m);
/// Solves M x = b; returns false when b is outside the column space.
bool solve(const ExactMatrix& m, std::span<const Scalar> b, std::vector<Scalar>& x);

/// Matrix of Y -> Y A - A Y on row-major vec(Y); its kernel is the centralizer of A.
ExactMatrix commutant_map(const ExactMatrix& a);

} // namespace belitskii
