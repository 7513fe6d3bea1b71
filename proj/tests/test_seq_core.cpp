#include <doctest.h>

#include "seqalg/seq.hpp"

using namespace seqalg;
using Q = Rational;
using S = Seq<Q>;

TEST_CASE("construction and basic access") {
    CHECK(seq_to_string(S::x(), 4) == "[0,1,0,0]");
    CHECK(seq_to_string(S(Q(7)), 3) == "[7,0,0]");
    CHECK(seq_to_string(S::from_coeffs({1, 2, 3}), 5) == "[1,2,3,0,0]");
    CHECK(seq_to_string(S::repeat(Q(4)), 3) == "[4,4,4]");
    CHECK(*S::from_coeffs({1, 2, 3}).finite_len() == 3);
    CHECK_FALSE(S::repeat(Q(1)).is_finite());
}

TEST_CASE("ring operations and finiteness markers") {
    S f = S::from_coeffs({1, 1});
    S g = S::from_coeffs({1, -1});
    CHECK(seq_to_string(f * g, 4) == "[1,0,-1,0]");
    CHECK(*(f * g).finite_len() == 3);
    CHECK(seq_to_string(f + g, 3) == "[2,0,0]");
    CHECK(seq_to_string(f - f, 2) == "[0,0]");
    CHECK(seq_to_string(scalar_mul(Q(1, 2), f), 2) == "[1/2,1/2]");
}

TEST_CASE("division produces power series inverses") {
    S fib = S::one() / S::from_coeffs({1, -1, -1});
    CHECK(seq_to_string(fib, 10) == "[1,1,2,3,5,8,13,21,34,55]");
    // common leading zeros cancel
    S q = (S::x() * S::x()) / S::x();
    CHECK(q.is_finite());
    CHECK(seq_to_string(q, 3) == "[0,1,0]");
    // exact polynomial division keeps finite results finite
    S p = S::from_coeffs({1, 2, 1}) / S::from_coeffs({1, 1});
    CHECK(p.is_finite());
    CHECK(seq_to_string(p, 3) == "[1,1,0]");
}

TEST_CASE("division by zero is detected") {
    try {
        (S::one() / S::zero()).nth(0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivideByZero);
    }
    try {
        (S::one() / S::x()).nth(0); // nonzero over a higher-order zero
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivideByZero);
    }
}

TEST_CASE("fixpoints are productive thanks to convolution short-circuit") {
    S cat = fix<Q>([](const S& b) { return S::one() + S::x() * b * b; });
    CHECK(seq_to_string(cat, 8) == "[1,1,2,5,14,42,132,429]");
}

TEST_CASE("unproductive fixpoints raise instead of looping") {
    S bad = fix<Q>([](const S& s) { return S::one() + s; });
    try {
        bad.nth(0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonProductive);
    }
}

TEST_CASE("square root") {
    CHECK(seq_to_string(sqroot(S::from_coeffs({1, 2, 1})), 4) == "[1,1,0,0]");
    S f = S::from_coeffs({1, 3, -2, 5});
    CHECK(prefix_eq(sqroot(f * f), f, 10));
    // an even number of leading zeros is stripped pairwise
    S g = S::x() * S::x() * f;
    CHECK(prefix_eq(sqroot(g * g), g, 10));
    try {
        sqroot(S::x()).nth(0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotASquareRootDomain);
    }
}

TEST_CASE("composition") {
    // finite outer sequence: Horner evaluation, even at nonzero heads
    S h = compose(S::from_coeffs({4, -1, 3}), S::from_coeffs({2}));
    CHECK(seq_to_string(h, 2) == "[14,0]");
    // infinite outer sequence requires a zero-head inner sequence
    S e = compose(S::one() / (S::one() - S::x()), S::x() * S::x());
    CHECK(seq_to_string(e, 5) == "[1,0,1,0,1]");
    try {
        compose(S::repeat(Q(1)), S::from_coeffs({1, 1})).nth(0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonTerminatingComposition);
    }
}

TEST_CASE("converse inverts composition") {
    S f = S::x() / S::from_coeffs({1, -1});
    S g = converse(f);
    CHECK(seq_to_string(g, 5) == "[0,1,-1,1,-1]");
    CHECK(prefix_eq(compose(f, g), S::x(), 10));
    CHECK(prefix_eq(compose(g, f), S::x(), 10));
    try {
        converse(S::one()).nth(1);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotConversible);
    }
}

TEST_CASE("integer powers") {
    CHECK(seq_to_string(pow_int(S::from_coeffs({1, 1}), 4), 5) ==
          "[1,4,6,4,1]");
    CHECK(seq_to_string(pow_int(S::from_coeffs({1, 1}), 0), 2) == "[1,0]");
    CHECK(prefix_eq(pow_int(S::from_coeffs({1, 1}), -2) *
                        S::from_coeffs({1, 2, 1}),
                    S::one(), 10));
}

TEST_CASE("polynomial reversal requires finite input") {
    CHECK(seq_to_string(reverse_poly(S::from_coeffs({1, 2, 3})), 3) ==
          "[3,2,1]");
    try {
        reverse_poly(S::repeat(Q(1)));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InfiniteInput);
    }
}

TEST_CASE("whole-number projection of prefixes") {
    auto w = S::from_coeffs({4, 6, 8}).take_whole(3);
    CHECK(w.size() == 3);
    CHECK(w[2] == 8);
    CHECK_THROWS_AS(S::from_coeffs({Q(1, 2)}).take_whole(1), Error);
}

TEST_CASE("memoization returns stable values") {
    int calls = 0;
    S s = S::from_fn([&calls](std::uint64_t n) {
        ++calls;
        return Q(Integer(n));
    });
    CHECK(s.nth(5) == Q(5));
    CHECK(s.nth(5) == Q(5));
    CHECK(s.nth(3) == Q(3));
    CHECK(calls == 2); // each index produced at most once
}
