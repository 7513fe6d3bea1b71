#pragma once

#include <cmath>
#include <cstdlib>
#include <vector>

#include "seqalg/bivariate.hpp"
#include "seqalg/linear.hpp"

namespace seqalg {

// ---- Lagrange inversion -------------------------------------------------------------

// nth coefficient of s^k where s solves s = x*(r o s):
// [x^n] s^k = (k/n) [x^(n-k)] r^n.
template <class C>
C lagrange_term(const Seq<C>& r, unsigned long n, unsigned long k) {
    if (n < 1 || k < 1 || k > n)
        throw Error(ErrorKind::Domain, "lagrange_term needs 1 <= k <= n");
    if (field_traits<C>::is_zero(r.nth(0)))
        throw Error(ErrorKind::Domain, "lagrange_term needs a nonzero head");
    Seq<C> rn = pow_int(r, static_cast<long>(n));
    return field_traits<C>::from_integer(Integer(k)) /
           field_traits<C>::from_integer(Integer(n)) * rn.nth(n - k);
}

// ---- general binomial coefficients -----------------------------------------------------

// [x^k](1+bx)^r = b^k * r(r-1)...(r-k+1) / k!.
template <class C>
C binom_general(const C& r, const C& b, unsigned long k) {
    C bk = field_traits<C>::one();
    for (unsigned long i = 0; i < k; ++i) bk = bk * b;
    return bk * fall(r, k) / C(field_traits<C>::from_integer(factorial(k)));
}

// ---- Bernoulli numbers ------------------------------------------------------------------

// Bernoulli numbers B_n as a sequence: e2o of x/(exp - 1).
inline const Seq<Rational>& bernoulli() {
    static const Seq<Rational> s = e2o(bernoulli_seq<Rational>());
    return s;
}

// sum_{k<=n} C(n,k) B_k = B_n + [n==1], for all n <= N.
inline bool bernoulli_recurrence_check(std::size_t N) {
    const Seq<Rational>& B = bernoulli();
    for (std::size_t n = 0; n <= N; ++n) {
        Rational acc(0);
        for (std::size_t k = 0; k <= n; ++k)
            acc += Rational(binomial(n, k)) * B.nth(k);
        Rational expect = B.nth(n) + (n == 1 ? Rational(1) : Rational(0));
        if (acc != expect) return false;
    }
    return true;
}

// C = B + x/2 is even: C o (-x) = C, through prefix N.
inline bool c_evenness_check(std::size_t N) {
    using S = Seq<Rational>;
    S C = bernoulli_seq<Rational>() + scalar_mul(Rational(1, 2), S::x());
    S minus_x = S::from_coeffs({Rational(0), Rational(-1)});
    return prefix_eq(compose(C, minus_x), C, N);
}

// ---- power-sum polynomials ------------------------------------------------------------

// Row m is the polynomial p with p(n) = sum_{k<n} k^m, as ascending
// coefficients of length m+2.
inline Triangle power_sum_polys(std::size_t rows) {
    return take_e_biv(powerSums(), spec_range(2, rows + 1));
}

// ---- continued fractions ----------------------------------------------------------------

namespace detail {

inline Seq<Rational> cf_fac_denom(long n, unsigned depth) {
    using S = Seq<Rational>;
    if (depth == 0) return S::one();
    S rec = S::defer([n, depth]() { return S::one() / cf_fac_denom(n + 1, depth - 1); });
    return S::one() - scalar_mul(Rational(2 * n - 1), S::x()) -
           scalar_mul(Rational(n * n), S::x() * S::x() * rec);
}

inline Seq<Rational> cf_tan_u(long k, unsigned depth) {
    using S = Seq<Rational>;
    if (depth == 0) return S::one();
    S rec = S::defer([k, depth]() { return cf_tan_u(k + 1, depth - 1); });
    return S::one() /
           (S::one() - scalar_mul(Rational(k * (k + 1)), S::x() * S::x() * rec));
}

} // namespace detail

// Continued fraction for the factorial numbers, truncated at the given
// depth (innermost denominator replaced by 1); the first 2*depth-2 terms
// are exact.
inline Seq<Rational> cf_factorials(unsigned depth) {
    return Seq<Rational>::one() / detail::cf_fac_denom(1, depth);
}

// Continued fraction for the tangent-number sequence, same truncation rule.
inline Seq<Rational> cf_tangent(unsigned depth) {
    return Seq<Rational>::x() * detail::cf_tan_u(1, depth);
}

// ---- Entringer boustrophedon -------------------------------------------------------------

// Rows built by alternately taking suffix sums and prefix sums, seeded
// with [1].
inline Triangle entringer(std::size_t rows) {
    using S = Seq<Rational>;
    Triangle out;
    S row = S::from_coeffs({Rational(1)});
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t len = static_cast<std::size_t>(*row.finite_len());
        std::vector<Rational> v = row.take(len);
        out.push_back(v);
        row = (r % 2 == 0) ? suffix_sums(row) : prefix_sums(row);
    }
    return out;
}

// The same triangle out of the two-variable zigzags enumerator, with the
// exponential normalisation removed on both indices.
inline Triangle zigzags_rows(std::size_t rows) {
    const Biv& s = zigzags();
    Triangle out;
    for (std::size_t n = 0; n < rows; ++n) {
        std::vector<Rational> v;
        for (std::size_t i = 0; i <= n; ++i)
            v.push_back(s.nth(n).nth(i) * Rational(factorial(i)) *
                        Rational(factorial(n - i)));
        out.push_back(std::move(v));
    }
    return out;
}

inline bool zigzags_check(std::size_t rows) {
    return entringer(rows) == zigzags_rows(rows);
}

// ---- Logan polynomials ----------------------------------------------------------------

// Iterated form: p_0 = x, p_{i+1} = (1+x^2) * D p_i; row i lists the
// coefficients of p_i (ascending), trimmed to its natural length i+2.
inline Triangle logan_polys(std::size_t rows) {
    using S = Seq<Rational>;
    Triangle out;
    S p = S::x();
    S shaper = S::one() + S::x() * S::x();
    for (std::size_t i = 0; i < rows; ++i) {
        out.push_back(p.take(i + 2));
        p = shaper * deriv(p);
    }
    return out;
}

// Closed form: the same rows read off the two-variable quotient
// (sin o z + u (cos o z)) / (cos o z - u (sin o z)).
inline Triangle logan_closed(std::size_t rows) {
    static const Biv s = []() {
        Biv sz = compose(lift(sinx<Rational>()), biv_z());
        Biv cz = compose(lift(cosx<Rational>()), biv_z());
        return (sz + biv_u() * cz) / (cz - biv_u() * sz);
    }();
    return take_e_biv(s, spec_range(2, rows + 1));
}

// ---- Moessner / Long / Paasche sieve ---------------------------------------------------

// One sieve step: with h the current coefficient row (h(z,1), ascending)
// and d the degree increment, the next row is the diagonal of degree
// (deg h + d) in x2z(h) * pascal.
namespace detail {

inline Biv x2z(const std::vector<Rational>& h) {
    std::vector<Poly> diags;
    diags.reserve(h.size());
    for (std::size_t j = 0; j < h.size(); ++j) {
        std::vector<Rational> inner(j + 1, Rational(0));
        inner[j] = h[j];
        diags.push_back(Poly::from_coeffs(std::move(inner)));
    }
    return Biv::from_coeffs(std::move(diags));
}

inline std::vector<Rational> sieve_step(const std::vector<Rational>& h,
                                        unsigned long d) {
    Biv prod = x2z(h) * pascal();
    std::uint64_t m = h.size() - 1 + d;
    Poly diag = prod.nth(m);
    return diag.take(static_cast<std::size_t>(m) + 1);
}

} // namespace detail

// Sieve description: initial row h0(z,1) (ascending coefficients) and the
// stream of degree increments.
struct SieveSpec {
    std::vector<Rational> h0;
    std::vector<unsigned long> d;
};

// Leading coefficients of the sieve rows, seed row included at index 0.
inline std::vector<Rational> ksmlp(const std::vector<Rational>& h0,
                                   const std::vector<unsigned long>& d,
                                   std::size_t count) {
    if (h0.empty()) throw Error(ErrorKind::Domain, "sieve seed must be nonempty");
    std::vector<Rational> out;
    out.reserve(count);
    std::vector<Rational> h = h0;
    out.push_back(h.back());
    for (std::size_t n = 1; n < count; ++n) {
        unsigned long dn = n - 1 < d.size() ? d[n - 1] : 0;
        h = detail::sieve_step(h, dn);
        out.push_back(h.back());
    }
    return out;
}

inline std::vector<Rational> ksmlp(const SieveSpec& s, std::size_t count) {
    return ksmlp(s.h0, s.d, count);
}

// c_n = n^r for n = 1..count (Moessner's theorem): seed 1, increments
// [r,0,0,...]; the seed row's own leading coefficient is dropped.
inline std::vector<Rational> moessner(unsigned long r, std::size_t count) {
    std::vector<Rational> all =
        ksmlp({Rational(1)}, {r}, count + 1);
    return std::vector<Rational>(all.begin() + 1, all.end());
}

// c_n = (a + (n-1) b) n^r: seed [b, a-b], increments [r,0,0,...].
inline std::vector<Rational> long_sieve(long a, long b, unsigned long r,
                                        std::size_t count) {
    std::vector<Rational> all =
        ksmlp({Rational(b), Rational(a - b)}, {r}, count + 1);
    return std::vector<Rational>(all.begin() + 1, all.end());
}

// c_n = n! : seed 1, increments all 1 (Paasche).
inline std::vector<Rational> paasche_fac(std::size_t count) {
    std::vector<unsigned long> d(count, 1);
    std::vector<Rational> all = ksmlp({Rational(1)}, d, count + 1);
    return std::vector<Rational>(all.begin() + 1, all.end());
}

// c_n = prod_{i<n} (n-i)^(i+1) (superfactorials): increments 1,2,3,...
inline std::vector<Rational> super_fac(std::size_t count) {
    std::vector<unsigned long> d(count);
    for (std::size_t i = 0; i < count; ++i) d[i] = i + 1;
    std::vector<Rational> all = ksmlp({Rational(1)}, d, count + 1);
    return std::vector<Rational>(all.begin() + 1, all.end());
}

// The successive sieve stages as triangles: stage 0 is pascal itself, each
// later stage is x2z(previous diagonal r) * pascal; triangle t shows
// shape[t] diagonals (each diagonal at its natural length).
inline std::vector<Triangle> moessner_triangles(
    unsigned long r, const std::vector<std::size_t>& shape) {
    std::vector<Triangle> out;
    Biv s = pascal();
    for (std::size_t t = 0; t < shape.size(); ++t) {
        Triangle tri;
        for (std::size_t n = 0; n < shape[t]; ++n)
            tri.push_back(s.nth(n).take(n + 1));
        out.push_back(std::move(tri));
        s = detail::x2z(s.nth(r).take(static_cast<std::size_t>(r) + 1)) * pascal();
    }
    return out;
}

// ---- Euler-Maclaurin and zeta values --------------------------------------------------

// zeta(2) estimated by summing 1/x^2 for x = 1..9 and correcting the tail
// with the Euler-Maclaurin formula applied to g = 1/(x+10)^2 through B4.
// The derivative terms at the upper limit vanish since g decays.
inline double euler_maclaurin_zeta2() {
    double s9 = 0.0;
    for (int x = 1; x <= 9; ++x) s9 += 1.0 / (double(x) * double(x));
    auto g_deriv_at0 = [](int order) {
        // d^order/dx^order (x+10)^-2 at x=0: (-1)^order (order+1)! / 10^(order+2)
        double v = Rational(factorial(order + 1)).to_double() /
                   std::pow(10.0, order + 2);
        return (order % 2 == 0) ? v : -v;
    };
    double integral = 1.0 / 10.0;        // int_0^inf (x+10)^-2 dx
    double half_ends = 0.5 * (1.0 / 100.0); // (g(0) + g(inf))/2
    const Seq<Rational>& B = bernoulli();
    double corr = 0.0;
    for (int k = 2; k <= 4; ++k) {
        double bk = B.nth(k).to_double() / Rational(factorial(k)).to_double();
        corr += bk * (0.0 - g_deriv_at0(k - 1)); // [D^(k-1) g] from 0 to inf
    }
    return s9 + integral + half_ends + corr;
}

// zeta(2k) = (-1)^(k-1) 2^(2k-1) B_{2k} / (2k)! * pi^(2k), with exact
// Bernoulli input and float pi.
inline double zeta_even(unsigned k) {
    if (k < 1) throw Error(ErrorKind::Domain, "zeta_even needs k >= 1");
    Integer two_pow = Integer(1) << (2 * k - 1);
    Rational factor = Rational(two_pow) * bernoulli().nth(2 * k) /
                      Rational(factorial(2 * k));
    double sign = (k % 2 == 1) ? 1.0 : -1.0;
    return sign * factor.to_double() * std::pow(std::acos(-1.0), 2.0 * k);
}

// tan coefficients from the Bernoulli closed form:
// [x^(2k-1)] tan = (-1)^(k-1) 4^k (4^k - 1) B_{2k} / (2k)!, even ones zero.
inline bool tan_bernoulli_check(std::size_t N) {
    const Seq<Rational>& B = bernoulli();
    const Seq<Rational>& t = tanx<Rational>();
    for (std::size_t n = 0; n < N; ++n) {
        Rational expect(0);
        if (n % 2 == 1) {
            std::size_t k = (n + 1) / 2;
            Integer four_k = Integer(1) << (2 * k);
            Integer four_k_m1 = four_k - 1;
            Rational mag = Rational(four_k) * Rational(four_k_m1) *
                           B.nth(2 * k) / Rational(factorial(2 * k));
            expect = (k % 2 == 1) ? mag : -mag;
        }
        if (t.nth(n) != expect) return false;
    }
    return true;
}

} // namespace seqalg
