#include "belitskii/system.hpp"

#include "belitskii/error.hpp"

#include <sstream>

namespace belitskii {

SystemTriple::SystemTriple(ExactMatrix a_, ExactMatrix b_, ExactMatrix c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (!a.is_square())
        throw Error(ErrorKind::SizeMismatch, "A must be square");
    if (b.rows() != a.rows())
        throw Error(ErrorKind::SizeMismatch, "B must have n rows");
    if (c.cols() != a.rows())
        throw Error(ErrorKind::SizeMismatch, "C must have n columns");
}

SystemTriple SystemTriple::zero(DimensionVector d) {
    return SystemTriple(ExactMatrix(d.n, d.n), ExactMatrix(d.n, d.m), ExactMatrix(d.l, d.n));
}

GroupElement GroupElement::identity(DimensionVector d) {
    return {ExactMatrix::identity(d.m), ExactMatrix::identity(d.n), ExactMatrix::identity(d.l)};
}

GroupElement GroupElement::inverse() const { return {invert(x), invert(y), invert(z)}; }

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    if (g.dims() != h.dims())
        throw Error(ErrorKind::SizeMismatch, "group elements of different sizes");
    return {g.x * h.x, g.y * h.y, g.z * h.z};
}

SystemTriple apply_group(const GroupElement& g, const SystemTriple& s) {
    if (g.dims() != s.dims())
        throw Error(ErrorKind::SizeMismatch, "group element does not match system dimensions");
    if (!g.x.is_square() || !g.y.is_square() || !g.z.is_square())
        throw Error(ErrorKind::SizeMismatch, "group components must be square");
    const ExactMatrix y_inv = invert(g.y);
    const ExactMatrix x_inv = invert(g.x);
    invert(g.z);  // Z must still be invertible
    return SystemTriple(g.y * s.a * y_inv, g.y * s.b * x_inv, g.z * s.c * y_inv);
}

std::string to_string(DimensionVector d) {
    return "(" + std::to_string(d.m) + "," + std::to_string(d.n) + "," + std::to_string(d.l) + ")";
}

std::string describe(const SystemTriple& s) {
    std::ostringstream out;
    out << "A=" << s.a << " B=" << s.b << " C=" << s.c;
    return out.str();
}

SystemTriple direct_sum(const SystemTriple& s, const SystemTriple& t) {
    return SystemTriple(ExactMatrix::direct_sum(s.a, t.a), ExactMatrix::direct_sum(s.b, t.b),
                        ExactMatrix::direct_sum(s.c, t.c));
}

} // namespace belitskii
