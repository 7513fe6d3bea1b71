#include <doctest.h>

#include "seqalg/discrete.hpp"
#include "seqalg/species.hpp"

using namespace seqalg;
using Q = Rational;
using S = Seq<Q>;

TEST_CASE("difference and summation") {
    S sq = S::from_fn([](std::uint64_t n) { return Q(Integer(n * n)); });
    CHECK(seq_to_string(delta(sq), 5) == "[1,3,5,7,9]");
    CHECK(prefix_eq(S::repeat(sq.nth(0)) + sigma(delta(sq)), sq, 16));
    CHECK(prefix_eq(delta(sigma(sq)), sq, 16));
}

TEST_CASE("prefix and suffix sums") {
    S f = S::from_coeffs({1, 2, 3});
    CHECK(seq_to_string(prefix_sums(f), 5) == "[0,1,3,6,0]");
    CHECK(*prefix_sums(f).finite_len() == 4);
    CHECK(seq_to_string(suffix_sums(f), 5) == "[6,5,3,0,0]");
    try {
        suffix_sums(S::repeat(Q(1)));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InfiniteInput);
    }
}

TEST_CASE("shuffle product") {
    S star = starx<Q>();
    CHECK(seq_to_string(shuffle(star, star), 6) == "[1,2,4,8,16,32]");
    CHECK(seq_to_string(shuffle(S::one(), star), 5) == "[1,1,1,1,1]");
    // finite inputs give finite results
    S f = S::from_coeffs({1, 1});
    CHECK(shuffle(f, f).is_finite());
    CHECK(seq_to_string(shuffle(f, f), 4) == "[1,2,2,0]");
}

TEST_CASE("shuffle inverse") {
    S f = S::from_coeffs({1, -1});
    CHECK(seq_to_string(shuffle_inv(f), 7) == "[1,1,2,6,24,120,720]");
    CHECK(prefix_eq(shuffle(f, shuffle_inv(f)), S::one(), 10));
}

TEST_CASE("hadamard product and the heads/increments transforms") {
    S a = S::from_coeffs({1, 2, 3}), b = S::from_coeffs({4, 5, 6});
    CHECK(seq_to_string(hadamard(a, b), 4) == "[4,10,18,0]");
    S sq = S::from_fn([](std::uint64_t n) { return Q(Integer(n * n)); });
    CHECK(prefix_eq(i2h(h2i(sq)), sq, 12));
    CHECK(prefix_eq(h2i(i2h(sq)), sq, 12));
    CHECK(prefix_eq(rh2i(sq), h2i(sq), 10));
}

TEST_CASE("infiltration product") {
    S t = S::from_coeffs({3, 1, 4, 1, 5});
    CHECK(prefix_eq(infiltration(S::one(), t), t, 10));
    S s = S::from_coeffs({2, 7, 1});
    CHECK(prefix_eq(infiltration(s, t), infiltration(t, s), 10));
    CHECK(prefix_eq(infiltration(s, t), h2i(hadamard(i2h(s), i2h(t))), 10));
}

TEST_CASE("euler expansion of heads") {
    S sq = S::from_fn([](std::uint64_t n) { return Q(Integer(n * n)); });
    CHECK(euler_expand_check(sq, 3, 10));
    CHECK(euler_expand_check(S::repeat(Q(5)), 0, 10));
    // unbounded newton support: no finite expansion matches
    CHECK_FALSE(euler_expand_check(fibonacci<Q>(), 4, 10));
}

TEST_CASE("falling factorials and difference tables") {
    CHECK(fall(Q(5), 3) == Q(60)); // 5*4*3
    CHECK(fall(Q(5), 0) == Q(1));
    // sum of squares 0,1,5,14 has a cubic falling-factorial form
    S p = gregory_newton<Q>({Q(0), Q(1), Q(5), Q(14)});
    CHECK(eval_fac_poly(p, Q(5)) == Q(55));
    CHECK(eval_fac_poly(p, Q(10)) == Q(385));
}
