#pragma once

#include "seqalg/calculus.hpp"

namespace seqalg {

// Named counting sequences built from the combinatorial constructors
// list = 1/(1-x) and set = exp (exponential counting).  All are memoized
// singletons per coefficient field; the self-referential ones are fixpoints.

template <class C>
const Seq<C>& list_seq() { return starx<C>(); }

template <class C>
const Seq<C>& set_seq() { return expx<C>(); }

// log(1/(1-x)): exponential enumerator of cyclic arrangements.
template <class C>
const Seq<C>& cycle_seq() {
    static const Seq<C> s = log_seq(starx<C>());
    return s;
}

template <class C>
const Seq<C>& nonEmptyList() {
    static const Seq<C> s = list_seq<C>() - Seq<C>::one();
    return s;
}

template <class C>
const Seq<C>& pluralList() {
    static const Seq<C> s = list_seq<C>() - Seq<C>::x() - Seq<C>::one();
    return s;
}

template <class C>
const Seq<C>& nonEmptySet() {
    static const Seq<C> s = set_seq<C>() - Seq<C>::one();
    return s;
}

template <class C>
const Seq<C>& pluralSet() {
    static const Seq<C> s = nonEmptySet<C>() - Seq<C>::x();
    return s;
}

template <class C>
const Seq<C>& fibonacci() {
    static const Seq<C> s =
        compose(list_seq<C>(), Seq<C>::x() + Seq<C>::x() * Seq<C>::x());
    return s;
}

template <class C>
const Seq<C>& oneOrTwoCycle() {
    static const Seq<C> s =
        Seq<C>::x() + scalar_mul(field_traits<C>::one() /
                                     field_traits<C>::from_integer(Integer(2)),
                                 Seq<C>::x() * Seq<C>::x());
    return s;
}

template <class C>
const Seq<C>& involution() {
    static const Seq<C> s = compose(set_seq<C>(), oneOrTwoCycle<C>());
    return s;
}

template <class C>
const Seq<C>& nonLoopCycle() {
    static const Seq<C> s = cycle_seq<C>() - Seq<C>::x();
    return s;
}

template <class C>
const Seq<C>& derangement() {
    static const Seq<C> s = compose(set_seq<C>(), nonLoopCycle<C>());
    return s;
}

template <class C>
const Seq<C>& permutation() {
    static const Seq<C> s = derangement<C>() * set_seq<C>();
    return s;
}

template <class C>
const Seq<C>& setPartition() {
    static const Seq<C> s = compose(set_seq<C>(), nonEmptySet<C>());
    return s;
}

template <class C>
const Seq<C>& oddNumberOfParts() {
    static const Seq<C> s = compose(sinhx<C>(), nonEmptySet<C>());
    return s;
}

template <class C>
const Seq<C>& evenSizedParts() {
    static const Seq<C> s =
        compose(set_seq<C>(), coshx<C>() - Seq<C>::one());
    return s;
}

template <class C>
const Seq<C>& catalanTree() {
    static const Seq<C> s = fix<C>([](const Seq<C>& c) {
        return Seq<C>::x() * compose(list_seq<C>(), c);
    });
    return s;
}

template <class C>
const Seq<C>& cayleyTree() {
    static const Seq<C> s = fix<C>([](const Seq<C>& t) {
        return Seq<C>::x() * compose(set_seq<C>(), t);
    });
    return s;
}

template <class C>
const Seq<C>& connectedAcyclicGraph() {
    static const Seq<C> s =
        cayleyTree<C>() -
        scalar_mul(field_traits<C>::one() /
                       field_traits<C>::from_integer(Integer(2)),
                   cayleyTree<C>() * cayleyTree<C>());
    return s;
}

template <class C>
const Seq<C>& acyclicGraph() {
    static const Seq<C> s = compose(set_seq<C>(), connectedAcyclicGraph<C>());
    return s;
}

template <class C>
const Seq<C>& motzkinTree() {
    static const Seq<C> s = fix<C>([](const Seq<C>& m) {
        return Seq<C>::x() * (Seq<C>::one() + m + m * m);
    });
    return s;
}

template <class C>
const Seq<C>& hipparchusSchroeder() {
    static const Seq<C> s =
        (Seq<C>::one() + Seq<C>::x() -
         sqroot(Seq<C>::from_coeffs({field_traits<C>::one(),
                                     -field_traits<C>::from_integer(Integer(6)),
                                     field_traits<C>::one()}))) /
        Seq<C>(C(field_traits<C>::from_integer(Integer(4))));
    return s;
}

template <class C>
const Seq<C>& largeSchroeder() {
    static const Seq<C> s =
        scalar_mul(field_traits<C>::from_integer(Integer(2)),
                   hipparchusSchroeder<C>()) /
            Seq<C>::x() -
        Seq<C>::one();
    return s;
}

template <class C>
const Seq<C>& connectedMapping() {
    static const Seq<C> s = compose(cycle_seq<C>(), cayleyTree<C>());
    return s;
}

template <class C>
const Seq<C>& mapping() {
    static const Seq<C> s = compose(set_seq<C>(), connectedMapping<C>());
    return s;
}

template <class C>
const Seq<C>& fixedPointFree() {
    static const Seq<C> s =
        compose(set_seq<C>(), compose(nonLoopCycle<C>(), cayleyTree<C>()));
    return s;
}

template <class C>
const Seq<C>& idempotent() {
    static const Seq<C> s =
        compose(set_seq<C>(), Seq<C>::x() * set_seq<C>());
    return s;
}

template <class C>
const Seq<C>& partialMapping() {
    static const Seq<C> s =
        mapping<C>() * compose(set_seq<C>(), cayleyTree<C>());
    return s;
}

template <class C>
const Seq<C>& surjection() {
    static const Seq<C> s = compose(list_seq<C>(), nonEmptySet<C>());
    return s;
}

template <class C>
const Seq<C>& zigzag() {
    static const Seq<C> s =
        scalar_mul(field_traits<C>::from_integer(Integer(2)),
                   tanx<C>() + secx<C>());
    return s;
}

// x/(exp - 1): the exponential Bernoulli-number enumerator.
template <class C>
const Seq<C>& bernoulli_seq() {
    static const Seq<C> s = Seq<C>::x() / (expx<C>() - Seq<C>::one());
    return s;
}

// Catalan numbers themselves (heads of list-bracketings): b = 1 + x b^2.
template <class C>
const Seq<C>& catalan() {
    static const Seq<C> s = fix<C>([](const Seq<C>& b) {
        return Seq<C>::one() + Seq<C>::x() * b * b;
    });
    return s;
}

// Factorial numbers as the solution of f = 1 + x f + x^2 Df.
template <class C>
const Seq<C>& fac_ode() {
    static const Seq<C> s = fix<C>([](const Seq<C>& f) {
        return Seq<C>::one() + Seq<C>::x() * f +
               Seq<C>::x() * Seq<C>::x() * deriv(f);
    });
    return s;
}

} // namespace seqalg
