#include <doctest.h>

#include "seqalg/calculus.hpp"

using namespace seqalg;
using Q = Rational;
using S = Seq<Q>;

TEST_CASE("derivative and integral") {
    S f = S::from_coeffs({5, 1, 3});
    CHECK(seq_to_string(deriv(f), 3) == "[1,6,0]");
    CHECK(seq_to_string(integ(f), 4) == "[0,5,1/2,1]");
    CHECK(prefix_eq(deriv(integ(f)), f, 12));
    CHECK(prefix_eq(S(f.nth(0)) + integ(deriv(f)), f, 12));
}

TEST_CASE("factorial normalisation transforms are mutually inverse") {
    S f = S::from_coeffs({1, 1, 2, 6, 24});
    CHECK(prefix_eq(o2e(e2o(f)), f, 5));
    CHECK(seq_to_string(e2o(expx<Q>()), 6) == "[1,1,1,1,1,1]");
    CHECK(seq_to_string(o2e(S::repeat(Q(1))), 4) == "[1,1,1/2,1/6]");
}

TEST_CASE("core transcendental series") {
    CHECK(seq_to_string(expx<Q>(), 5) == "[1,1,1/2,1/6,1/24]");
    CHECK(seq_to_string(starx<Q>(), 5) == "[1,1,1,1,1]");
    CHECK(seq_to_string(lgnx<Q>(), 5) == "[0,1,-1/2,1/3,-1/4]");
    CHECK(seq_to_string(sinx<Q>(), 6) == "[0,1,0,-1/6,0,1/120]");
    CHECK(seq_to_string(cosx<Q>(), 5) == "[1,0,-1/2,0,1/24]");
    CHECK(seq_to_string(e2o(tanx<Q>()), 8) == "[0,1,0,2,0,16,0,272]");
    CHECK(prefix_eq(sinx<Q>() / cosx<Q>(), tanx<Q>(), 12));
    CHECK(prefix_eq(secx<Q>() * cosx<Q>(), S::one(), 12));
    CHECK(prefix_eq(sinx<Q>() * sinx<Q>() + cosx<Q>() * cosx<Q>(), S::one(),
                    12));
    CHECK(prefix_eq(deriv(sinhx<Q>()), coshx<Q>(), 12));
    CHECK(prefix_eq(deriv(tanhx<Q>()),
                    S::one() - tanhx<Q>() * tanhx<Q>(), 12));
    CHECK(prefix_eq(deriv(atanx<Q>()),
                    S::one() / S::from_coeffs({1, 0, 1}), 12));
    CHECK(prefix_eq(compose(sinx<Q>(), asinx<Q>()), S::x(), 10));
    CHECK(prefix_eq(deriv(gdx<Q>()) * coshx<Q>(), S::one(), 12));
}

TEST_CASE("logarithm of a unit-head series") {
    S f = S::from_coeffs({1, 2, -1});
    CHECK(prefix_eq(compose(expx<Q>(), log_seq(f)), f, 12));
    CHECK(prefix_eq(log_seq(S::one()), S::zero(), 12));
    try {
        log_seq(S::x()).nth(0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotLogDomain);
    }
}

TEST_CASE("rational powers") {
    S f = S::from_coeffs({1, 1});
    CHECK(prefix_eq(pow_f(f, Q(1, 2)), sqroot(f), 12));
    CHECK(prefix_eq(pow_f(f, Q(-1)) * f, S::one(), 12));
    CHECK(prefix_eq(pow_f(f, Q(3)), pow_int(f, 3), 12));
    // generalized binomial series: (1+x)^(1/3) cubed gives 1+x back
    S r = pow_f(f, Q(1, 3));
    CHECK(prefix_eq(r * r * r, f, 12));
}

TEST_CASE("named integer families") {
    CHECK(seq_to_string(nats<Q>(), 5) == "[0,1,2,3,4]");
    CHECK(seq_to_string(pos<Q>(), 5) == "[1,2,3,4,5]");
    CHECK(seq_to_string(facs<Q>(), 6) == "[1,1,2,6,24,120]");
}

TEST_CASE("x cot x via its even expansion") {
    CHECK(seq_to_string(xcotx<Q>(), 5) == "[1,0,-1/3,0,-1/45]");
    CHECK(prefix_eq(xcotx<Q>() * sinx<Q>(), S::x() * cosx<Q>(), 12));
}
