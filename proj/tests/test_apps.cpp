#include <doctest.h>

#include <cmath>

#include "seqalg/apps.hpp"

using namespace seqalg;
using Q = Rational;
using S = Seq<Q>;

static bool row_eq(const std::vector<Q>& got, std::initializer_list<long> want) {
    if (got.size() != want.size()) return false;
    std::size_t i = 0;
    for (long w : want)
        if (got[i++] != Q(w)) return false;
    return true;
}

TEST_CASE("implicit-function coefficient extraction") {
    // w = x (star o w) is the catalan generating function shifted by one
    for (unsigned long n = 1; n <= 8; ++n) {
        Q catalan_n_minus_1 = lagrange_term(starx<Q>(), n, 1);
        CHECK(catalan_n_minus_1 == catalan<Q>().nth(n - 1));
    }
    CHECK_THROWS_AS(lagrange_term(starx<Q>(), 0, 1), Error);
}

TEST_CASE("generalized binomials") {
    CHECK(binom_general(Q(-1), Q(-1), 3) == Q(1));
    CHECK(binom_general(Q(1, 2), Q(1), 2) == Q(-1, 8));
    CHECK(binom_general(Q(5), Q(1), 2) == Q(10));
}

TEST_CASE("bernoulli numbers and their classical properties") {
    CHECK(seq_to_string(bernoulli(), 8) == "[1,-1/2,1/6,0,-1/30,0,1/42,0]");
    CHECK(bernoulli_recurrence_check(12));
    CHECK(c_evenness_check(12));
    CHECK(tan_bernoulli_check(10));
}

TEST_CASE("power sums in closed polynomial form") {
    Triangle t = power_sum_polys(3);
    CHECK(t.size() == 3);
    CHECK(t[2] == std::vector<Q>{Q(0), Q(1, 6), Q(-1, 2), Q(1, 3)});
}

TEST_CASE("continued fraction expansions") {
    CHECK(seq_to_string(cf_factorials(4), 6) == "[1,1,2,6,24,120]");
    // the tangent continued fraction carries the factorials, so it expands
    // to the tangent numbers
    CHECK(seq_to_string(cf_tangent(6), 10) ==
          seq_to_string(e2o(tanx<Q>()), 10));
}

TEST_CASE("boustrophedon triangle") {
    Triangle e = entringer(7);
    // tangent numbers down the first column of odd rows
    CHECK(e[1][0] == Q(1));
    CHECK(e[3][0] == Q(2));
    CHECK(e[5][0] == Q(16));
    // secant numbers at the ends of even rows
    CHECK(e[6][6] == Q(61));
    CHECK(zigzags_check(7));
}

TEST_CASE("sieve computations") {
    CHECK(row_eq(moessner(2, 5), {1, 4, 9, 16, 25}));
    CHECK(row_eq(moessner(4, 5), {1, 16, 81, 256, 625}));
    // long's generalization: a=2, b=3 gives (2+3(n-1))n^r
    auto l = long_sieve(2, 3, 1, 4);
    CHECK(l[0] == Q(2));
    CHECK(l[1] == Q(10)); // (2+3)*2
    CHECK(l[2] == Q(24)); // (2+6)*3
    // paasche's schedule produces factorials, the super schedule
    // superfactorials
    CHECK(row_eq(paasche_fac(5), {1, 2, 6, 24, 120}));
    CHECK(row_eq(super_fac(4), {1, 2, 12, 288}));
}

TEST_CASE("float demos stay within their documented tolerances") {
    double pi = std::acos(-1.0);
    CHECK(std::abs(euler_maclaurin_zeta2() - pi * pi / 6.0) < 1e-6);
    CHECK(std::abs(zeta_even(1) - pi * pi / 6.0) < 1e-12);
    CHECK(std::abs(zeta_even(2) - std::pow(pi, 4) / 90.0) < 1e-12);
}
