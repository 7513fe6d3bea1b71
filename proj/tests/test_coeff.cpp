#include <doctest.h>

#include "seqalg/rational.hpp"

using namespace seqalg;

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
    CHECK(Rational(-4, 6).str() == "-2/3");
    CHECK(Rational(4, -6).str() == "-2/3");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(0, 5) == Rational(0));
}

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((-a).str() == "-1/3");
    CHECK_THROWS_AS(a / Rational(0), Error);
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("wholeness projection") {
    CHECK(Rational(14, 7).to_whole() == 2);
    try {
        Rational(1, 2).to_whole();
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotWhole);
    }
}

TEST_CASE("gaussian rationals") {
    Gaussian i = Gaussian::i();
    CHECK(i * i == Gaussian(Rational(-1)));
    Gaussian z(Rational(1, 2), Rational(-3));
    CHECK(z.str() == "1/2-3i");
    CHECK((z + i).str() == "1/2-2i");
    CHECK(Gaussian(Rational(5)).str() == "5");
    CHECK(Gaussian(Rational(5)).to_real() == Rational(5));
    try {
        i.to_real();
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotReal);
    }
}

TEST_CASE("gaussian division") {
    Gaussian i = Gaussian::i();
    Gaussian one(Rational(1));
    CHECK(one / i == -i);
    CHECK((Gaussian(Rational(1), Rational(1)) *
           Gaussian(Rational(1), Rational(-1))) == Gaussian(Rational(2)));
}

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(5, 0) == 1);
}
