#pragma once

#include <vector>

#include <gmpxx.h>

#include "belitskii/scalar.hpp"

namespace belitskii {

/// Dense polynomial over Q(i), coefficients in ascending degree order
/// (index k holds the coefficient of x^k). The zero polynomial is empty.
using Polynomial = std::vector<Scalar>;

void trim(Polynomial& p);
int degree(const Polynomial& p);
Scalar evaluate(const Polynomial& p, const Scalar& x);
Polynomial derivative(const Polynomial& p);
Polynomial make_monic(Polynomial p);
/// Quotient and remainder of a / b; b must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd.
Polynomial gcd(Polynomial a, Polynomial b);
/// Product of the distinct irreducible factors (monic).
Polynomial squarefree_part(const Polynomial& p);

struct GaussianInteger {
    mpz_class re;
    mpz_class im;
};

mpz_class norm(const GaussianInteger& g);

/// Factorisation of a positive integer into primes (ascending, with
/// multiplicity as repeated entries). Trial division, then Pollard-Brent.
std::vector<mpz_class> factor_integer(mpz_class n);

/// All roots in Q(i) of a nonzero polynomial, without multiplicity, sorted by
/// the scalar total order. Candidates are the Gaussian-integer divisors of the
/// constant term of the monic integral rescaling, each tested exactly.
std::vector<Scalar> gaussian_rational_roots(const Polynomial& p);

struct SplitResult {
    std::vector<std::pair<Scalar, unsigned>> roots;  ///< ascending, with multiplicity
    Polynomial residual;                             ///< monic, constant 1 when p splits
};

/// Splits p over Q(i) as far as possible.
SplitResult split_over_gaussian_rationals(const Polynomial& p);

} // namespace belitskii
