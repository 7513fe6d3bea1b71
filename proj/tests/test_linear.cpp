#include <doctest.h>

#include "seqalg/linear.hpp"

using namespace seqalg;
using Q = Rational;
using S = Seq<Q>;

TEST_CASE("linear recurrences from annihilating polynomials") {
    Lode<Q> fib{S::from_coeffs({-1, -1, 1}), S::from_coeffs({1, 1})};
    CHECK(seq_to_string(klarner_solve(fib), 10) == "[1,1,2,3,5,8,13,21,34,55]");
    // y'' = -y, y(0)=1, y'(0)=0  ~>  cos
    Lode<Q> cosq{S::from_coeffs({1, 0, 1}), S::from_coeffs({1, 0})};
    CHECK(seq_to_string(lode_to_ode(cosq), 7) == "[1,0,-1/2,0,1/24,0,-1/720]");
    try {
        klarner_solve<Q>({S::from_coeffs({3}), S::zero()});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateRecurrence);
    }
}

TEST_CASE("matrix arithmetic") {
    Matrix<Q> A(2, 2, Q(0)), B(2, 3, Q(1));
    A.at(0, 0) = Q(1);
    A.at(0, 1) = Q(2);
    A.at(1, 0) = Q(3);
    A.at(1, 1) = Q(4);
    Matrix<Q> AB = A * B;
    CHECK(AB.rows() == 2);
    CHECK(AB.cols() == 3);
    CHECK(AB.at(0, 0) == Q(3));
    CHECK(AB.at(1, 2) == Q(7));
    CHECK_THROWS_AS(B * B, Error);
    Matrix<Q> I = Matrix<Q>::identity(2, Q(0), Q(1));
    CHECK((A * I).at(1, 0) == Q(3));
}

TEST_CASE("matrix star counts walks") {
    Matrix<Q> A(2, 2, Q(0));
    A.at(0, 0) = Q(1);
    A.at(0, 1) = Q(1);
    A.at(1, 0) = Q(1);
    auto star = kleene_star(A);
    // powers of the fibonacci companion matrix
    CHECK(seq_to_string(star.at(0, 0), 8) == "[1,1,2,3,5,8,13,21]");
    CHECK(seq_to_string(star.at(0, 1), 8) == "[0,1,1,2,3,5,8,13]");
}

TEST_CASE("characteristic polynomial annihilates its matrix") {
    Matrix<Q> A(3, 3, Q(0));
    A.at(0, 0) = Q(2);
    A.at(0, 1) = Q(-1);
    A.at(1, 1) = Q(1, 2);
    A.at(1, 2) = Q(3);
    A.at(2, 0) = Q(1);
    A.at(2, 2) = Q(-1);
    S p = char_poly(A);
    CHECK(*p.finite_len() == 4);
    CHECK(p.nth(3) == Q(1)); // monic
    CHECK(cayley_hamilton_check(A, 12));
}

TEST_CASE("matrix exponential agrees with the star transform") {
    Matrix<Q> A(2, 2, Q(0));
    A.at(0, 0) = Q(1);
    A.at(0, 1) = Q(1);
    A.at(1, 0) = Q(1);
    auto phi = matrix_exp(A);
    auto star = kleene_star(A);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(prefix_eq(phi.at(i, j), o2e(star.at(i, j)), 8));
}
