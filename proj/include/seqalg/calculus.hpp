#pragma once

#include "seqalg/seq.hpp"

namespace seqalg {

// ---- formal differentiation and integration -----------------------------------

template <class C>
Seq<C> deriv(const Seq<C>& f) {
    std::optional<std::uint64_t> len;
    if (f.finite_len()) len = *f.finite_len() > 0 ? *f.finite_len() - 1 : 0;
    return Seq<C>::from_fn(
        [f](std::uint64_t n) {
            return C(field_traits<C>::from_integer(Integer(n + 1))) * f.nth(n + 1);
        },
        len);
}

template <class C>
Seq<C> integ(const Seq<C>& f) {
    std::optional<std::uint64_t> len;
    if (f.finite_len()) len = *f.finite_len() + 1;
    return Seq<C>::from_fn(
        [f](std::uint64_t n) {
            if (n == 0) return field_traits<C>::zero();
            return f.nth(n - 1) / C(field_traits<C>::from_integer(Integer(n)));
        },
        len);
}

// ---- bridges between exponential and ordinary coefficients --------------------

// Multiply coefficient n by n! (exponential -> ordinary view).
template <class C>
Seq<C> e2o(const Seq<C>& f) {
    return Seq<C>::from_fn(
        [f](std::uint64_t n) {
            return C(field_traits<C>::from_integer(factorial(n))) * f.nth(n);
        },
        f.finite_len());
}

// Divide coefficient n by n! (ordinary -> exponential view).
template <class C>
Seq<C> o2e(const Seq<C>& f) {
    return Seq<C>::from_fn(
        [f](std::uint64_t n) {
            return f.nth(n) / C(field_traits<C>::from_integer(factorial(n)));
        },
        f.finite_len());
}

// ---- handy scalar streams -------------------------------------------------------

// [0, 1, 2, 3, ...]
template <class C>
Seq<C> nats() {
    return Seq<C>::from_fn([](std::uint64_t n) {
        return C(field_traits<C>::from_integer(Integer(n)));
    });
}

// [1, 2, 3, 4, ...]
template <class C>
Seq<C> pos() {
    return Seq<C>::from_fn([](std::uint64_t n) {
        return C(field_traits<C>::from_integer(Integer(n + 1)));
    });
}

// [0!, 1!, 2!, ...]
template <class C>
Seq<C> facs() {
    return Seq<C>::from_fn([](std::uint64_t n) {
        return C(field_traits<C>::from_integer(factorial(n)));
    });
}

// ---- core transcendental series ------------------------------------------------
//
// Each is a memoized singleton per coefficient field, built from its
// defining integral equation so the definitions double as executable
// documentation.

template <class C>
const Seq<C>& expx() {
    static const Seq<C> s = fix<C>([](const Seq<C>& f) {
        return Seq<C>::one() + integ(f);
    });
    return s;
}

// 1/(1-x) = [1, 1, 1, ...]
template <class C>
const Seq<C>& starx() {
    static const Seq<C> s = Seq<C>::repeat(field_traits<C>::one());
    return s;
}

// log(1+x)
template <class C>
const Seq<C>& lgnx() {
    static const Seq<C> s =
        integ(Seq<C>::one() / (Seq<C>::one() + Seq<C>::x()));
    return s;
}

template <class C>
const Seq<C>& sinx() {
    static const Seq<C> s = fix<C>([](const Seq<C>& f) {
        return integ(Seq<C>::one() - integ(f));
    });
    return s;
}

template <class C>
const Seq<C>& cosx() {
    static const Seq<C> s = Seq<C>::one() - integ(sinx<C>());
    return s;
}

template <class C>
const Seq<C>& tanx() {
    static const Seq<C> s = fix<C>([](const Seq<C>& f) {
        return integ(Seq<C>::one() + f * f);
    });
    return s;
}

template <class C>
const Seq<C>& secx() {
    static const Seq<C> s = fix<C>([](const Seq<C>& f) {
        return Seq<C>::one() + integ(f * tanx<C>());
    });
    return s;
}

template <class C>
const Seq<C>& sinhx() {
    static const Seq<C> s = fix<C>([](const Seq<C>& f) {
        return integ(Seq<C>::one() + integ(f));
    });
    return s;
}

template <class C>
const Seq<C>& coshx() {
    static const Seq<C> s = Seq<C>::one() + integ(sinhx<C>());
    return s;
}

template <class C>
const Seq<C>& tanhx() {
    static const Seq<C> s = fix<C>([](const Seq<C>& f) {
        return integ(Seq<C>::one() - f * f);
    });
    return s;
}

// Gudermannian: integral of 1/cosh.
template <class C>
const Seq<C>& gdx() {
    static const Seq<C> s = integ(Seq<C>::one() / coshx<C>());
    return s;
}

template <class C>
const Seq<C>& atanx() {
    static const Seq<C> s =
        integ(Seq<C>::one() / (Seq<C>::one() + Seq<C>::x() * Seq<C>::x()));
    return s;
}

template <class C>
const Seq<C>& asinx() {
    static const Seq<C> s = integ(
        Seq<C>::one() / sqroot(Seq<C>::one() - Seq<C>::x() * Seq<C>::x()));
    return s;
}

// x*cot(x) (the quotient x*cos/sin is a power series even though cot alone
// is not).
template <class C>
const Seq<C>& xcotx() {
    static const Seq<C> s = (Seq<C>::x() * cosx<C>()) / sinx<C>();
    return s;
}

template <class C>
const Seq<C>& xcothx() {
    static const Seq<C> s = (Seq<C>::x() * coshx<C>()) / sinhx<C>();
    return s;
}

// r*x*coth(r*x) for a scalar r; specialises to x*cot(x) at r = i.
template <class C>
Seq<C> xcth(const C& r) {
    Seq<C> rx = Seq<C>::from_coeffs({field_traits<C>::zero(), r});
    return scalar_mul(r, Seq<C>::x() * compose(coshx<C>(), rx)) /
           compose(sinhx<C>(), rx);
}

// ---- logarithm and general powers ------------------------------------------------

// log of a series with unit head: log f = lgnx o (f - 1).
template <class C>
Seq<C> log_seq(const Seq<C>& f) {
    return Seq<C>::defer([f]() {
        if (!field_traits<C>::is_one(f.nth(0)))
            throw Error(ErrorKind::NotLogDomain,
                        "logarithm requires a series with unit head");
        return compose(lgnx<C>(), f - Seq<C>::one());
    });
}

// f^r = exp o (r * log f) for a scalar exponent r; requires unit head.
template <class C>
Seq<C> pow_f(const Seq<C>& f, const C& r) {
    return compose(expx<C>(), scalar_mul(r, log_seq(f)));
}

} // namespace seqalg
