#pragma once

#include <vector>

#include "belitskii/reduction.hpp"

namespace belitskii {

struct OrbitInfo {
    size_t dim_group = 0;         ///< m^2 + n^2 + l^2
    size_t dim_orbit = 0;
    size_t dim_stabilizer = 0;
    size_t dim_system_space = 0;  ///< mn + n^2 + ln
};

size_t sigma_of_block(const ReducedBlock& b);

/// Sum of the trace's sigmas; checks the stabilizer dimension against the
/// one tracked by the reduction.
OrbitInfo orbit_dimension(const CanonicalSystem& c);

/// Matrix of (X, Y, Z) -> (YA - AY, YB - BX, ZC - CY). Columns follow the
/// stabilizer coordinates (vec X, vec Y, vec Z, row-major).
ExactMatrix tangent_map(const SystemTriple& s);
size_t orbit_dimension_oracle(const SystemTriple& s);

/// Basis of {(X, Y, Z) : YA = AY, YB = BX, ZC = CY}. The triples need not be
/// invertible.
std::vector<GroupElement> endomorphism_basis(const SystemTriple& s);
bool is_indecomposable_by_local_ring(const SystemTriple& s);

size_t link_count(const CanonicalSystem& c);
bool is_indecomposable_by_links(const CanonicalSystem& c);

/// Canonical form of a system with n = 0 (only (1,0,0) and (0,0,1) are
/// indecomposable there); canonicalize() itself rejects these.
CanonicalSystem trivial_canonical(DimensionVector d);

/// Indecomposable summands, each canonical, sorted by dimension vector and
/// then by canonical matrices.
std::vector<CanonicalSystem> decompose(const SystemTriple& s);

/// Total order used to sort summands.
bool summand_less(const SystemTriple& a, const SystemTriple& b);

} // namespace belitskii
