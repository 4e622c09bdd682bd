#pragma once

#include <cstddef>
#include <string>

#include "belitskii/matrix.hpp"

namespace belitskii {

struct DimensionVector {
    size_t m = 0;  ///< inputs
    size_t n = 0;  ///< states
    size_t l = 0;  ///< outputs

    size_t total() const { return m + n + l; }
    friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
    friend auto operator<=>(const DimensionVector&, const DimensionVector&) = default;
};

/// A linear system (A, B, C): A is n x n, B is n x m, C is l x n.
struct SystemTriple {
    ExactMatrix a;
    ExactMatrix b;
    ExactMatrix c;

    SystemTriple() = default;
    /// Validates the shapes.
    SystemTriple(ExactMatrix a, ExactMatrix b, ExactMatrix c);
    static SystemTriple zero(DimensionVector d);

    DimensionVector dims() const { return {b.cols(), a.rows(), c.rows()}; }
    friend bool operator==(const SystemTriple&, const SystemTriple&) = default;
};

/// (X, Y, Z), acting by (A, B, C) -> (Y A Y^-1, Y B X^-1, Z C Y^-1).
struct GroupElement {
    ExactMatrix x;
    ExactMatrix y;
    ExactMatrix z;

    static GroupElement identity(DimensionVector d);
    DimensionVector dims() const { return {x.rows(), y.rows(), z.rows()}; }
    GroupElement inverse() const;

    /// (g * h) acts as g after h.
    friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

SystemTriple apply_group(const GroupElement& g, const SystemTriple& s);

std::string to_string(DimensionVector d);
/// One-line rendering for reports, e.g. "A=[1 1; 0 1] B=[0; 1] C=[1 2]".
std::string describe(const SystemTriple& s);

/// Block-diagonal direct sum of two systems.
SystemTriple direct_sum(const SystemTriple& s, const SystemTriple& t);

} // namespace belitskii
