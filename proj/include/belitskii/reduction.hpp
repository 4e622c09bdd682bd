#pragma once

#include <span>
#include <vector>

#include "belitskii/system.hpp"
#include "belitskii/weyr.hpp"

namespace belitskii {

/// Which data block of [[A, B], [C, 0]] a reduced subblock lives in.
enum class Region { A, B, C };
enum class BlockKind { Empty, EdgeIdentity, WeyrBlock };
/// The three coordinate spaces the group acts on: X (inputs), Y (states), Z (outputs).
enum class Space { X, Y, Z };

const char* to_string(Region r);
const char* to_string(BlockKind k);

/// Row and column ranges are in the coordinates of the region's own matrix
/// (e.g. rows of B are state indices, columns are input indices).
struct BlockLocation {
    Region region = Region::A;
    size_t row_begin = 0;
    size_t row_end = 0;
    size_t col_begin = 0;
    size_t col_end = 0;
};

struct ReducedBlock {
    BlockKind kind = BlockKind::Empty;
    size_t rank = 0;              ///< r, for EdgeIdentity
    EigenStructure structure;     ///< for WeyrBlock
    size_t rows = 0;
    size_t cols = 0;
    size_t sigma = 0;
    BlockLocation location;
};

/// A contiguous range of one coordinate space. Strips sharing a link class
/// are transformed by the same diagonal block (index-wise identified).
struct Strip {
    Space space = Space::Y;
    size_t begin = 0;
    size_t size = 0;
    int link_class = 0;
};

/// The stabilizer of the blocks reduced so far, as the associative algebra
/// of (X, Y, Z) satisfying the accumulated homogeneous constraints; its
/// invertible elements are the group. Coordinates are vec(X), vec(Y), vec(Z),
/// each row-major.
class StabilizerDescription {
public:
    StabilizerDescription() = default;
    /// All of gl_m x gl_n x gl_l, one strip per nonempty space.
    static StabilizerDescription full(DimensionVector d);

    DimensionVector dims() const { return dims_; }
    size_t dimension() const { return basis_.size(); }
    size_t coordinate_count() const { return dims_.m * dims_.m + dims_.n * dims_.n + dims_.l * dims_.l; }
    const std::vector<std::vector<Scalar>>& basis() const { return basis_; }
    const std::vector<Strip>& strips() const { return strips_; }

    GroupElement element(std::span<const Scalar> coords) const;
    std::vector<Scalar> coordinates(const GroupElement& g) const;
    bool contains(const GroupElement& g) const;

private:
    friend class Reducer;
    DimensionVector dims_;
    std::vector<Strip> strips_;
    std::vector<std::vector<Scalar>> basis_;
};

struct CanonicalSystem {
    SystemTriple canonical;
    GroupElement witness;            ///< apply_group(witness, input) == canonical
    std::vector<ReducedBlock> trace; ///< in reduction order
    StabilizerDescription final_stabilizer;
};

/// Reduces A to Weyr form, then B strip by strip (bottom row first, left to
/// right), then C (left column first, bottom row first), each block under
/// the stabilizer of everything reduced before it.
CanonicalSystem canonicalize(const SystemTriple& s);
bool are_equivalent(const SystemTriple& s1, const SystemTriple& s2);

/// P * M * Q^{-1} == block, with block = [0 I_r; 0 0].
struct EdgeReduction {
    size_t rank = 0;
    ExactMatrix block;
    ExactMatrix row_transform;  ///< P
    ExactMatrix col_transform;  ///< Q
};

EdgeReduction edge_reduce(const ExactMatrix& m);
/// The canonical edge shape: identity r x r in the upper-right corner.
ExactMatrix edge_block(size_t rows, size_t cols, size_t r);

struct Regularization {
    bool cleared = false;              ///< the additions span the whole block space
    ExactMatrix block;                 ///< m + sum_k coefficients[k] * additions[k]
    std::vector<Scalar> coefficients;
};

/// Uses the additive freedom spanned by `additions` to clear m. When the
/// freedom is partial, the coordinates it reaches are zeroed and the rest
/// are left in place.
Regularization regularize(const ExactMatrix& m, std::span<const ExactMatrix> additions);

/// Weyr form of a block acted on by simultaneous conjugation.
WeyrDecomposition loop_reduce(const ExactMatrix& m);

} // namespace belitskii
