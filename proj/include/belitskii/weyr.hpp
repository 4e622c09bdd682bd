#pragma once

#include <vector>

#include "belitskii/matrix.hpp"
#include "belitskii/polynomial.hpp"

namespace belitskii {

/// Jordan data of one eigenvalue: block sizes, weakly decreasing.
struct EigenBlock {
    Scalar eigenvalue;
    std::vector<size_t> partition;

    friend bool operator==(const EigenBlock&, const EigenBlock&) = default;
};

/// Eigenvalues strictly increasing in the scalar total order.
struct EigenStructure {
    std::vector<EigenBlock> blocks;

    size_t dimension() const;
    friend bool operator==(const EigenStructure&, const EigenStructure&) = default;
};

struct WeyrForm {
    ExactMatrix matrix;
    EigenStructure structure;
    /// Per eigenvalue, the Weyr characteristic w_1 >= w_2 >= ... (the
    /// conjugate partition of the Jordan block sizes).
    std::vector<std::vector<size_t>> strip_sizes;
};

struct WeyrDecomposition {
    WeyrForm form;
    ExactMatrix transform;  ///< Y with Y * A * Y^{-1} == W
};

/// det(xI - A), ascending coefficients, monic.
Polynomial char_poly(const ExactMatrix& a);
/// Roots of char_poly with multiplicity, ascending. Throws
/// EigenvaluesNotInField carrying the irreducible residual when the
/// polynomial does not split over Q(i).
std::vector<Scalar> eigenvalues(const ExactMatrix& a);
std::vector<size_t> jordan_partition(const ExactMatrix& a, const Scalar& lambda);
std::vector<size_t> conjugate_partition(const std::vector<size_t>& p);
EigenStructure eigen_structure(const ExactMatrix& a);
WeyrDecomposition weyr_form(const ExactMatrix& a);

/// Dimension of the centralizer: sum over eigenvalues of sum_j (2j-1) q_j.
size_t centralizer_dim(const EigenStructure& s);

/// Builds the Weyr matrix for a given structure (no transform involved).
WeyrForm weyr_matrix(const EigenStructure& s);
/// Builds the Jordan matrix, blocks by eigenvalue then decreasing size.
ExactMatrix jordan_matrix(const EigenStructure& s);

struct JordanPresentation {
    ExactMatrix permutation;  ///< P with P * W * P^T == J
    ExactMatrix jordan;
};

JordanPresentation jordan_presentation(const WeyrForm& w);

} // namespace belitskii
