#include "belitskii/polynomial.hpp"

#include <algorithm>
#include <map>

#include "belitskii/error.hpp"

namespace belitskii {

void trim(Polynomial& p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

int degree(const Polynomial& p) { return static_cast<int>(p.size()) - 1; }

Scalar evaluate(const Polynomial& p, const Scalar& x) {
    Scalar acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial derivative(const Polynomial& p) {
    Polynomial d;
    for (size_t k = 1; k < p.size(); ++k)
        d.push_back(p[k] * Scalar(static_cast<long>(k)));
    trim(d);
    return d;
}

Polynomial make_monic(Polynomial p) {
    trim(p);
    if (p.empty())
        return p;
    Scalar lead = p.back();
    for (auto& c : p)
        c /= lead;
    return p;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    Polynomial den = b;
    trim(den);
    if (den.empty())
        throw Error(ErrorKind::Singular, "polynomial division by zero");
    Polynomial rem = a;
    trim(rem);
    if (rem.size() < den.size())
        return {Polynomial{}, rem};
    Polynomial quo(rem.size() - den.size() + 1);
    Scalar inv = den.back().inverse();
    for (size_t k = quo.size(); k-- > 0;) {
        Scalar f = rem[k + den.size() - 1] * inv;
        quo[k] = f;
        if (f.is_zero())
            continue;
        for (size_t j = 0; j < den.size(); ++j)
            rem[k + j] -= f * den[j];
    }
    trim(rem);
    trim(quo);
    return {quo, rem};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = make_monic(std::move(r));
    }
    return make_monic(std::move(a));
}

Polynomial squarefree_part(const Polynomial& p) {
    Polynomial g = gcd(p, derivative(p));
    return make_monic(divmod(p, g).first);
}

mpz_class norm(const GaussianInteger& g) { return g.re * g.re + g.im * g.im; }

namespace {

GaussianInteger mul(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// Exact quotient a / b when it exists in Z[i].
bool exact_div(const GaussianInteger& a, const GaussianInteger& b, GaussianInteger& q) {
    mpz_class n = norm(b);
    mpz_class re = a.re * b.re + a.im * b.im;
    mpz_class im = a.im * b.re - a.re * b.im;
    if (re % n != 0 || im % n != 0)
        return false;
    q = {re / n, im / n};
    return true;
}

mpz_class round_div(const mpz_class& a, const mpz_class& n) {
    // nearest integer to a / n, n > 0
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), mpz_class(2 * a + n).get_mpz_t(), mpz_class(2 * n).get_mpz_t());
    return q;
}

GaussianInteger ggcd(GaussianInteger a, GaussianInteger b) {
    while (norm(b) != 0) {
        mpz_class n = norm(b);
        GaussianInteger q{round_div(a.re * b.re + a.im * b.im, n), round_div(a.im * b.re - a.re * b.im, n)};
        GaussianInteger qb = mul(q, b);
        GaussianInteger r{a.re - qb.re, a.im - qb.im};
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

mpz_class pollard_brent(const mpz_class& n) {
    if (n % 2 == 0)
        return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, x, g = 1, q = 1, ys;
        const unsigned long m = 64;
        unsigned long r = 1;
        auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    mpz_class d = x - y;
                    q = (q * abs(d)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                mpz_class d = x - ys;
                mpz_gcd(g.get_mpz_t(), mpz_class(abs(d)).get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_into(mpz_class n, std::vector<mpz_class>& out) {
    if (n == 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
        out.push_back(n);
        return;
    }
    mpz_class d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

// t with t^2 = -1 mod p, for a prime p = 1 mod 4.
mpz_class sqrt_minus_one(const mpz_class& p) {
    mpz_class e = (p - 1) / 4;
    for (mpz_class c = 2;; ++c) {
        mpz_class t;
        mpz_powm(t.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        if ((t * t + 1) % p == 0)
            return t;
    }
}

std::vector<GaussianInteger> gaussian_primes_over(const mpz_class& p) {
    if (p == 2)
        return {{1, 1}};
    if (p % 4 == 3)
        return {{p, 0}};
    GaussianInteger pi = ggcd({p, 0}, {sqrt_minus_one(p), 1});
    return {pi, {pi.re, -pi.im}};
}

bool is_root(const std::vector<GaussianInteger>& coeffs, const GaussianInteger& x) {
    GaussianInteger acc{0, 0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = mul(acc, x);
        acc.re += it->re;
        acc.im += it->im;
    }
    return acc.re == 0 && acc.im == 0;
}

mpz_class isqrt_ceil(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r < n)
        ++r;
    return r;
}

} // namespace

std::vector<mpz_class> factor_integer(mpz_class n) {
    if (n <= 0)
        throw Error(ErrorKind::Internal, "factor_integer needs a positive integer");
    std::vector<mpz_class> out;
    for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.emplace_back(p);
            n /= p;
        }
    }
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Scalar> gaussian_rational_roots(const Polynomial& input) {
    Polynomial p = make_monic(input);
    if (p.empty())
        throw Error(ErrorKind::Internal, "roots of the zero polynomial");
    std::vector<Scalar> roots;
    if (p.size() == 1)
        return roots;
    if (p[0].is_zero()) {
        roots.emplace_back(0);
        while (!p.empty() && p[0].is_zero())
            p.erase(p.begin());
        if (p.size() == 1)
            return roots;
    }

    // Rescale x -> x / delta so the polynomial is monic with Gaussian-integer
    // coefficients; its roots in Q(i) are then Gaussian integers dividing the
    // constant term.
    const size_t d = p.size() - 1;
    mpz_class delta = 1;
    for (const auto& c : p) {
        mpz_lcm(delta.get_mpz_t(), delta.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(delta.get_mpz_t(), delta.get_mpz_t(), c.im().get_den_mpz_t());
    }
    std::vector<GaussianInteger> coeffs(d + 1);
    mpz_class scale = 1;
    for (size_t k = d + 1; k-- > 0;) {
        Rational re = p[k].re() * scale, im = p[k].im() * scale;
        re.canonicalize();
        im.canonicalize();
        if (re.get_den() != 1 || im.get_den() != 1)
            throw Error(ErrorKind::Internal, "rescaling did not clear denominators");
        coeffs[k] = {re.get_num(), im.get_num()};
        scale *= delta;
    }

    // Cauchy bound on |root|, squared, to prune the divisor enumeration.
    mpz_class max_abs = 0;
    for (size_t k = 0; k < d; ++k)
        max_abs = std::max(max_abs, isqrt_ceil(norm(coeffs[k])));
    const mpz_class bound = (max_abs + 1) * (max_abs + 1);

    const GaussianInteger a0 = coeffs[0];
    std::vector<std::pair<GaussianInteger, unsigned>> factors;
    {
        std::vector<mpz_class> primes = factor_integer(norm(a0));
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        GaussianInteger rest = a0;
        for (const auto& p_int : primes)
            for (const auto& pi : gaussian_primes_over(p_int)) {
                unsigned e = 0;
                GaussianInteger q;
                while (exact_div(rest, pi, q)) {
                    rest = q;
                    ++e;
                }
                if (e > 0)
                    factors.emplace_back(pi, e);
            }
        if (norm(rest) != 1)
            throw Error(ErrorKind::Internal, "incomplete Gaussian factorisation");
    }

    const GaussianInteger units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::vector<GaussianInteger> found;
    auto visit = [&](auto&& self, size_t idx, const GaussianInteger& acc) -> void {
        if (norm(acc) > bound)
            return;
        if (idx == factors.size()) {
            for (const auto& u : units) {
                GaussianInteger cand = mul(acc, u);
                if (is_root(coeffs, cand))
                    found.push_back(cand);
            }
            return;
        }
        GaussianInteger cur = acc;
        for (unsigned e = 0; e <= factors[idx].second; ++e) {
            if (norm(cur) > bound)
                break;
            self(self, idx + 1, cur);
            cur = mul(cur, factors[idx].first);
        }
    };
    visit(visit, 0, GaussianInteger{1, 0});

    for (const auto& g : found)
        roots.emplace_back(Rational(g.re, delta), Rational(g.im, delta));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

SplitResult split_over_gaussian_rationals(const Polynomial& input) {
    Polynomial p = make_monic(input);
    if (p.empty())
        throw Error(ErrorKind::Internal, "splitting the zero polynomial");
    SplitResult out;
    for (const auto& r : gaussian_rational_roots(squarefree_part(p))) {
        unsigned mult = 0;
        const Polynomial lin{-r, Scalar(1)};
        while (p.size() > 1 && evaluate(p, r).is_zero()) {
            p = divmod(p, lin).first;
            ++mult;
        }
        out.roots.emplace_back(r, mult);
    }
    out.residual = std::move(p);
    return out;
}

} // namespace belitskii
