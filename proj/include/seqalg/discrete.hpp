#pragma once

#include <memory>
#include <vector>

#include "seqalg/calculus.hpp"

namespace seqalg {

// ---- finite differences and summation -----------------------------------------

// Forward difference: (delta s)_n = s_{n+1} - s_n.
template <class C>
Seq<C> delta(const Seq<C>& s) {
    return Seq<C>::from_fn(
        [s](std::uint64_t n) { return s.nth(n + 1) - s.nth(n); });
}

// Indefinite sum: (sigma s)_n = s_0 + ... + s_{n-1}, so delta(sigma s) = s.
template <class C>
Seq<C> sigma(const Seq<C>& s) {
    auto partial = std::make_shared<std::vector<C>>(
        std::vector<C>{field_traits<C>::zero()});
    return Seq<C>::from_fn([s, partial](std::uint64_t n) {
        while (partial->size() <= n)
            partial->push_back(partial->back() + s.nth(partial->size() - 1));
        return (*partial)[n];
    });
}

// Running sums with leading zero; a finite input of length L yields length
// L+1.
template <class C>
Seq<C> prefix_sums(const Seq<C>& s) {
    std::optional<std::uint64_t> len;
    if (s.finite_len()) len = *s.finite_len() + 1;
    auto partial = std::make_shared<std::vector<C>>(
        std::vector<C>{field_traits<C>::zero()});
    return Seq<C>::from_fn(
        [s, partial](std::uint64_t n) {
            while (partial->size() <= n)
                partial->push_back(partial->back() + s.nth(partial->size() - 1));
            return (*partial)[n];
        },
        len);
}

// Mirror image of prefix_sums; only defined for finite sequences.
template <class C>
Seq<C> suffix_sums(const Seq<C>& s) {
    if (!s.is_finite())
        throw Error(ErrorKind::InfiniteInput,
                    "suffix sums need a finite sequence");
    std::vector<C> cs = s.take(static_cast<std::size_t>(*s.finite_len()));
    std::vector<C> out(cs.size() + 1, field_traits<C>::zero());
    for (std::size_t i = cs.size(); i-- > 0;) out[i] = out[i + 1] + cs[i];
    return Seq<C>::from_coeffs(std::move(out));
}

// ---- shuffle algebra -------------------------------------------------------------

// Shuffle (Hurwitz) product, defined by the Leibniz head-tail rule:
// head s0*t0, tail s' sh t + s sh t'.  Pointwise it is the binomial
// convolution; that formula is kept in the tests as an independent oracle.
template <class C>
Seq<C> shuffle(const Seq<C>& s, const Seq<C>& t) {
    if ((s.finite_len() && *s.finite_len() == 0) ||
        (t.finite_len() && *t.finite_len() == 0))
        return Seq<C>::zero();
    std::optional<std::uint64_t> len;
    if (s.finite_len() && t.finite_len())
        len = *s.finite_len() + *t.finite_len() - 1;
    Seq<C> r = Seq<C>::defer([s, t]() {
        return Seq<C>::cons(s.nth(0) * t.nth(0),
                            shuffle(s.tail(), t) + shuffle(s, t.tail()));
    });
    return Seq<C>::from_fn([r](std::uint64_t n) { return r.nth(n); }, len);
}

// Shuffle inverse: r with (r sh f) = 1; requires an invertible head.
template <class C>
Seq<C> shuffle_inv(const Seq<C>& f) {
    return Seq<C>::defer([f]() {
        if (field_traits<C>::is_zero(f.nth(0)))
            throw Error(ErrorKind::DivideByZero,
                        "shuffle inverse of a series with zero head");
        C h = field_traits<C>::one() / f.nth(0);
        return fix<C>([f, h](const Seq<C>& r) {
            return Seq<C>::cons(h, -shuffle(f.tail(), shuffle(r, r)));
        });
    });
}

// Pointwise (Hadamard) product.
template <class C>
Seq<C> hadamard(const Seq<C>& s, const Seq<C>& t) {
    std::optional<std::uint64_t> len;
    if (s.finite_len() && t.finite_len())
        len = std::min(*s.finite_len(), *t.finite_len());
    else if (s.finite_len())
        len = s.finite_len();
    else
        len = t.finite_len();
    return Seq<C>::from_fn(
        [s, t](std::uint64_t n) { return s.nth(n) * t.nth(n); }, len);
}

// Infiltration product: like shuffle but letters may also coincide,
// giving head s0*t0 and tail s' inf t + s inf t' + s' inf t'.
template <class C>
Seq<C> infiltration(const Seq<C>& s, const Seq<C>& t) {
    if ((s.finite_len() && *s.finite_len() == 0) ||
        (t.finite_len() && *t.finite_len() == 0))
        return Seq<C>::zero();
    return Seq<C>::defer([s, t]() {
        return Seq<C>::cons(s.nth(0) * t.nth(0),
                            infiltration(s.tail(), t) +
                                infiltration(s, t.tail()) +
                                infiltration(s.tail(), t.tail()));
    });
}

// ---- Newton / Euler transforms -----------------------------------------------------

// h2i: from values s_n to iterated-difference heads (delta^n s)_0.
template <class C>
Seq<C> h2i(const Seq<C>& s) {
    return shuffle(Seq<C>::one() / (Seq<C>::one() + Seq<C>::x()), s);
}

// i2h: inverse of h2i, rebuilding values from difference heads.
template <class C>
Seq<C> i2h(const Seq<C>& s) {
    return shuffle(starx<C>(), s);
}

// Recursive reference form of h2i, kept as a cross-check oracle:
// head s_0, then recurse on delta s.
template <class C>
Seq<C> rh2i(const Seq<C>& s) {
    return Seq<C>::defer(
        [s]() { return Seq<C>::cons(s.nth(0), rh2i(delta(s))); });
}

// ---- falling factorials and factorial polynomials -----------------------------------

// Falling factorial n(n-1)...(n-m+1) with m factors.
template <class C>
C fall(const C& n, unsigned long m) {
    C r = field_traits<C>::one();
    for (unsigned long i = 0; i < m; ++i)
        r = r * (n - field_traits<C>::from_integer(Integer(i)));
    return r;
}

// A factorial polynomial is a finite coefficient list over the falling
// factorial basis: p(x) = sum_k c_k * x(x-1)...(x-k+1).  The conversions
// to and from the monomial basis live in bivariate.hpp, since they are
// driven by the Stirling triangles extracted from the two-variable
// partition and cycle enumerators.
template <class C>
C eval_fac_poly(const Seq<C>& p, const C& at) {
    if (!p.is_finite())
        throw Error(ErrorKind::InfiniteInput, "factorial polynomial must be finite");
    C acc = field_traits<C>::zero();
    std::uint64_t len = *p.finite_len();
    for (std::uint64_t k = 0; k < len; ++k)
        acc = acc + p.nth(k) * fall(at, k);
    return acc;
}

// Gregory-Newton interpolation: from the first m values of a sequence to
// the factorial polynomial with those values, coefficient k being
// (delta^k s)(0) / k! ... without the k! since the falling-factorial basis
// absorbs it:  p = sum_k (delta^k s)_0 / k! * x^(falling k).
template <class C>
Seq<C> gregory_newton(const std::vector<C>& values) {
    std::vector<C> diffs = values;
    std::vector<C> out;
    out.reserve(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        out.push_back(diffs[0] / C(field_traits<C>::from_integer(factorial(k))));
        for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
            diffs[i] = diffs[i + 1] - diffs[i];
        diffs.pop_back();
    }
    return Seq<C>::from_coeffs(std::move(out));
}

// Euler expansion: s agrees with
//   sum_{k<=K} (delta^k s)_0 x^k / (1-x)^{k+1}
// on a prefix of length N exactly when s is (eventually dominated by) a
// polynomial sequence of degree <= K.
template <class C>
bool euler_expand_check(const Seq<C>& s, unsigned K, std::size_t N) {
    Seq<C> heads = h2i(s);
    Seq<C> acc = Seq<C>::zero();
    Seq<C> one_minus_x = Seq<C>::one() - Seq<C>::x();
    for (unsigned k = 0; k <= K; ++k) {
        Seq<C> term = scalar_mul(heads.nth(k),
                                 shift(Seq<C>::one(), k) / pow_int(one_minus_x, k + 1));
        acc = acc + term;
    }
    return prefix_eq(acc, s, N);
}

} // namespace seqalg
