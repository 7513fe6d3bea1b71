#pragma once

#include <vector>

#include "seqalg/discrete.hpp"
#include "seqalg/species.hpp"

namespace seqalg {

// Two-variable sequences are represented by their diagonals: a Biv is a
// sequence of polynomials where diagonal n collects the total-degree-n
// terms, and inner position k of diagonal n holds the coefficient of
// u^(n-k) z^k (inner position = z-degree).

using Poly = Seq<Rational>;
using Biv = Seq<Poly>;
using Triangle = std::vector<std::vector<Rational>>;
using TriangleW = std::vector<std::vector<Integer>>;

inline const Biv& biv_u() {
    static const Biv s =
        Biv::from_coeffs({Poly::zero(), Poly::from_coeffs({1, 0})});
    return s;
}

inline const Biv& biv_z() {
    static const Biv s =
        Biv::from_coeffs({Poly::zero(), Poly::from_coeffs({0, 1})});
    return s;
}

// Embed a univariate sequence as a two-variable one with constant-polynomial
// diagonals (the series in u, with no z-dependence).
inline Biv lift(const Seq<Rational>& f) {
    return Biv::from_fn([f](std::uint64_t n) { return Poly(f.nth(n)); },
                        f.finite_len());
}

// Force each diagonal into a perfect triangle: diagonal n padded (or cut)
// to exactly n+1 entries.
inline Biv pad_tri(const Biv& s) {
    return Biv::from_fn(
        [s](std::uint64_t n) {
            Poly d = s.nth(n);
            return Poly::from_fn([d](std::uint64_t j) { return d.nth(j); },
                                 n + 1);
        },
        s.finite_len());
}

// Rows of the coefficient triangle: row i holds, for increasing j, the
// coefficient of u^j z^i — i.e. the z-degree-i slice of the series.
inline Biv un_diag(const Biv& s) {
    return Biv::from_fn([s](std::uint64_t i) {
        return Poly::from_fn(
            [s, i](std::uint64_t j) { return s.nth(i + j).nth(i); });
    });
}

// Same rows with the exponential z-normalisation removed: row i is scaled
// by i!, recovering whole counting numbers from exponential enumerators.
inline Biv un_diag_e2o(const Biv& s) {
    return Biv::from_fn([s](std::uint64_t i) {
        Rational f(factorial(i));
        return Poly::from_fn(
            [s, i, f](std::uint64_t j) { return f * s.nth(i + j).nth(i); });
    });
}

// Ragged prefix: row r of the result is the first spec[r] entries of row r
// of the source.
inline Triangle select(const Biv& rows, const std::vector<std::size_t>& spec) {
    Triangle out;
    out.reserve(spec.size());
    for (std::size_t r = 0; r < spec.size(); ++r) {
        std::vector<Rational> row;
        row.reserve(spec[r]);
        for (std::size_t j = 0; j < spec[r]; ++j) row.push_back(rows.nth(r).nth(j));
        out.push_back(std::move(row));
    }
    return out;
}

inline TriangleW select_w(const Biv& rows, const std::vector<std::size_t>& spec) {
    Triangle t = select(rows, spec);
    TriangleW out;
    out.reserve(t.size());
    for (auto& row : t) {
        std::vector<Integer> r;
        r.reserve(row.size());
        for (auto& v : row) r.push_back(v.to_whole());
        out.push_back(std::move(r));
    }
    return out;
}

inline Triangle take_e_biv(const Biv& s, const std::vector<std::size_t>& spec) {
    return select(un_diag_e2o(s), spec);
}

inline TriangleW take_e_biv_w(const Biv& s, const std::vector<std::size_t>& spec) {
    return select_w(un_diag_e2o(s), spec);
}

// Convenience: the spec [from, from+1, ..., to].
inline std::vector<std::size_t> spec_range(std::size_t from, std::size_t to) {
    std::vector<std::size_t> spec;
    for (std::size_t i = from; i <= to; ++i) spec.push_back(i);
    return spec;
}

// Partial derivative in z: shifts diagonals down by one and differentiates
// along the inner (z) index.
inline Biv dz(const Biv& s) {
    return Biv::from_fn([s](std::uint64_t n) { return deriv(s.nth(n + 1)); });
}

// Partial derivative in u: on diagonal n+1 (padded to n+2 entries), the
// u^(n+1-i) z^i term maps to (n+1-i) u^(n-i) z^i on diagonal n.
inline Biv du(const Biv& s) {
    return Biv::from_fn([s](std::uint64_t n) {
        Poly d = s.nth(n + 1);
        return Poly::from_fn(
            [d, n](std::uint64_t i) {
                return Rational(Integer(n + 1 - i)) * d.nth(i);
            },
            n + 1);
    });
}

// Maclaurin expansion computed the honest way, as heads of iterated
// derivatives scaled by 1/n!; coincides with the identity on sequences.
template <class C>
Seq<C> maclaurin(const Seq<C>& f) {
    auto derivs = std::make_shared<std::vector<Seq<C>>>(std::vector<Seq<C>>{f});
    return Seq<C>::from_fn([derivs](std::uint64_t n) {
        while (derivs->size() <= n) derivs->push_back(deriv(derivs->back()));
        return (*derivs)[n].nth(0) /
               C(field_traits<C>::from_integer(factorial(n)));
    });
}

namespace detail {

inline Biv taylor_rec(const Seq<Poly>& g) {
    return compose(g, biv_u()) +
           biv_z() * Biv::defer([g]() { return taylor_rec(deriv(g)); });
}

} // namespace detail

// Taylor expansion about u: f(u+z) as a two-variable sequence, i.e.
// sum_k z^k (D^k f)(u) / k!.  The 1/k! appears as the exponential
// normalisation of the z-index, applied per diagonal.
inline Biv taylor(const Seq<Poly>& f) {
    Biv raw = detail::taylor_rec(f);
    return Biv::from_fn([raw](std::uint64_t n) { return o2e(raw.nth(n)); },
                        raw.finite_len());
}

// ---- named two-variable sequences ------------------------------------------------

inline const Biv& pascal() {
    static const Biv s = compose(starx<Poly>(), biv_u() + biv_z());
    return s;
}

inline const Biv& intComposition() {
    static const Biv s = compose(
        list_seq<Poly>(), biv_u() * compose(nonEmptyList<Poly>(), biv_z()));
    return s;
}

inline const Biv& schroeder() {
    static const Biv s = fix<Poly>([](const Biv& b) {
        return biv_z() + biv_u() * compose(pluralList<Poly>(), b);
    });
    return s;
}

inline const Biv& catalanLeaves() {
    static const Biv s = fix<Poly>([](const Biv& b) {
        return biv_u() * biv_z() +
               biv_z() * compose(nonEmptyList<Poly>(), b);
    });
    return s;
}

inline const Biv& cayleyLeaves() {
    static const Biv s = fix<Poly>([](const Biv& b) {
        return biv_u() * biv_z() +
               biv_z() * compose(nonEmptySet<Poly>(), b);
    });
    return s;
}

inline const Biv& ebinom() {
    static const Biv s =
        compose(set_seq<Poly>(), biv_z() + biv_u() * biv_z());
    return s;
}

inline const Biv& cycles() {
    static const Biv s = compose(
        set_seq<Poly>(), biv_u() * compose(cycle_seq<Poly>(), biv_z()));
    return s;
}

inline const Biv& parts() {
    static const Biv s = compose(
        set_seq<Poly>(), biv_u() * compose(nonEmptySet<Poly>(), biv_z()));
    return s;
}

inline const Biv& permFixedPts() {
    static const Biv s = compose(derangement<Poly>(), biv_z()) *
                         compose(set_seq<Poly>(), biv_u() * biv_z());
    return s;
}

inline const Biv& zigzags() {
    static const Biv s =
        (compose(sinx<Poly>(), biv_u()) + compose(cosx<Poly>(), biv_u())) /
        compose(cosx<Poly>(), biv_u() + biv_z());
    return s;
}

inline const Biv& ascents() {
    static const Biv s = compose(
        list_seq<Poly>(),
        biv_z() + compose(pluralSet<Poly>(), biv_u() * biv_z() - biv_z()) /
                      (biv_u() - Biv::one()));
    return s;
}

inline const Biv& valleys() {
    static const Biv s = []() {
        Biv r = sqroot(Biv::one() - biv_u());
        return r / (r - compose(tanhx<Poly>(), biv_z() * r));
    }();
    return s;
}

inline const Biv& powerSums() {
    static const Biv s =
        (compose(expx<Poly>(), biv_u() * biv_z()) - Biv::one()) /
        (compose(expx<Poly>(), biv_z()) - Biv::one());
    return s;
}

inline const Biv& bernoulliPoly() {
    static const Biv s =
        biv_z() * compose(expx<Poly>(), biv_u() * biv_z()) /
        (compose(expx<Poly>(), biv_z()) - Biv::one());
    return s;
}

inline const Biv& legendre() {
    static const Biv s = pow_f(
        Biv::one() -
            scalar_mul(Poly(Rational(2)), biv_u() * biv_z()) +
            biv_z() * biv_z(),
        Poly(Rational(-1, 2)));
    return s;
}

inline const Biv& chebyshev() {
    static const Biv s =
        (Biv::one() - biv_u() * biv_z()) /
        (biv_z() * biv_z() -
         scalar_mul(Poly(Rational(2)), biv_u() * biv_z()) + Biv::one());
    return s;
}

inline const Biv& laguerre() {
    static const Biv s =
        (Biv::one() / (Biv::one() - biv_z())) *
        compose(expx<Poly>(),
                (-(biv_u() * biv_z())) / (Biv::one() - biv_z()));
    return s;
}

inline const Biv& hermite() {
    static const Biv s = compose(
        expx<Poly>(), scalar_mul(Poly(Rational(2)), biv_u() * biv_z()) -
                          biv_z() * biv_z());
    return s;
}

inline const Biv& meixner() {
    static const Biv s =
        pow_f(Biv::one() + biv_z() * biv_z(), Poly(Rational(-1, 2))) *
        compose(expx<Poly>(), biv_u() * compose(atanx<Poly>(), biv_z()));
    return s;
}

// ---- Stirling triangles, sourced from parts/cycles --------------------------------

namespace detail {

inline std::vector<std::vector<Rational>> stirling_set_rows(std::size_t rows) {
    Triangle t = take_e_biv(parts(), spec_range(1, rows));
    return t;
}

inline std::vector<std::vector<Rational>> stirling_cycle_rows_signed(
    std::size_t rows) {
    Triangle t = take_e_biv(cycles(), spec_range(1, rows));
    for (std::size_t n = 0; n < t.size(); ++n)
        for (std::size_t k = 0; k < t[n].size(); ++k)
            if ((n + k) % 2 == 1) t[n][k] = -t[n][k];
    return t;
}

} // namespace detail

// Change of basis from monomials to falling factorials, via the Stirling
// set triangle (rows of the partition enumerator).
inline Seq<Rational> to_fac_poly(const Seq<Rational>& p) {
    if (!p.is_finite())
        throw Error(ErrorKind::InfiniteInput, "conversion needs a finite polynomial");
    std::size_t len = static_cast<std::size_t>(*p.finite_len());
    auto rows = detail::stirling_set_rows(len);
    std::vector<Rational> out(len, Rational(0));
    for (std::size_t n = 0; n < len; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            out[k] += p.nth(n) * rows[n][k];
    return Seq<Rational>::from_coeffs(std::move(out));
}

// Inverse change of basis, via the signed Stirling cycle triangle.
inline Seq<Rational> from_fac_poly(const Seq<Rational>& p) {
    if (!p.is_finite())
        throw Error(ErrorKind::InfiniteInput, "conversion needs a finite polynomial");
    std::size_t len = static_cast<std::size_t>(*p.finite_len());
    auto rows = detail::stirling_cycle_rows_signed(len);
    std::vector<Rational> out(len, Rational(0));
    for (std::size_t n = 0; n < len; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            out[k] += p.nth(n) * rows[n][k];
    return Seq<Rational>::from_coeffs(std::move(out));
}

} // namespace seqalg
