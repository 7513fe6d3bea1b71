#include <doctest.h>

#include "seqalg/bivariate.hpp"

using namespace seqalg;
using Q = Rational;

TEST_CASE("generators and lifting") {
    CHECK(seq_to_string(biv_u().nth(1), 2) == "[1,0]");
    CHECK(seq_to_string(biv_z().nth(1), 2) == "[0,1]");
    Biv f = lift(starx<Q>());
    CHECK(f.nth(2).nth(0) == Q(1)); // pure powers of u
    CHECK(f.nth(2).nth(1) == Q(0));
}

TEST_CASE("pascal diagonals are binomial rows") {
    Triangle t = select(pad_tri(pascal()), spec_range(1, 5));
    CHECK(t[4] == std::vector<Q>{Q(1), Q(4), Q(6), Q(4), Q(1)});
}

TEST_CASE("row views of the diagonal representation") {
    // row i, entry j of the plain view picks the z-degree-i coefficient of
    // diagonal i+j
    Biv rows = un_diag(pascal());
    CHECK(rows.nth(0).nth(3) == Q(1));
    CHECK(rows.nth(2).nth(2) == Q(6)); // [u^2 z^2] (u+z)^4
    Triangle e = take_e_biv(ebinom(), spec_range(1, 4));
    CHECK(e[3] == std::vector<Q>{Q(1), Q(3), Q(3), Q(1)});
}

TEST_CASE("partial derivatives") {
    Biv uz = biv_u() * biv_z();
    CHECK(seq_to_string(du(uz).nth(1), 2) == "[0,1]"); // d/du (uz) = z
    CHECK(seq_to_string(dz(uz).nth(1), 2) == "[1,0]"); // d/dz (uz) = u
    // on pascal: both partials of (u+z)^n give n(u+z)^(n-1)
    Biv p = pascal();
    CHECK(prefix_eq(du(p).nth(2), dz(p).nth(2), 3));
}

TEST_CASE("maclaurin expansion is the identity") {
    CHECK(prefix_eq(maclaurin(hipparchusSchroeder<Q>()),
                    hipparchusSchroeder<Q>(), 8));
    CHECK(prefix_eq(maclaurin(starx<Q>()), starx<Q>(), 8));
}

TEST_CASE("taylor expansion about u") {
    Biv tx = taylor(lift(Seq<Q>::x()));
    // x shifted by z is u + z
    CHECK(seq_to_string(tx.nth(1), 2) == "[1,1]");
    CHECK(seq_to_string(tx.nth(0), 1) == "[0]");
    // exp(u+z) = exp(u)exp(z): every row of the e2o'd view is the
    // exponential series again
    Biv te = taylor(lift(expx<Q>()));
    Biv rows = un_diag_e2o(te);
    CHECK(prefix_eq(rows.nth(0), expx<Q>(), 6));
    CHECK(prefix_eq(rows.nth(2), expx<Q>(), 6));
}

TEST_CASE("stirling triangles from partition and cycle enumerators") {
    Triangle parts_rows = take_e_biv(parts(), spec_range(1, 6));
    CHECK(parts_rows[4] == std::vector<Q>{Q(0), Q(1), Q(7), Q(6), Q(1)});
    // row sums are the Bell numbers, also reachable via set partitions
    Seq<Q> bell = e2o(setPartition<Q>());
    for (std::size_t n = 0; n < 6; ++n) {
        Q total(0);
        for (const Q& v : parts_rows[n]) total += v;
        CHECK(total == bell.nth(n));
    }
}

TEST_CASE("falling-factorial basis change is invertible") {
    Poly p = Poly::from_coeffs({0, 0, 1}); // x^2
    CHECK(seq_to_string(to_fac_poly(p), 3) == "[0,1,1]");
    CHECK(prefix_eq(from_fac_poly(to_fac_poly(p)), p, 3));
    Poly q = Poly::from_coeffs({Q(3), Q(-2), Q(1, 2), Q(5)});
    CHECK(prefix_eq(from_fac_poly(to_fac_poly(q)), q, 4));
}

TEST_CASE("orthogonal polynomial generating functions") {
    // legendre rows against the classical first polynomials
    Triangle t = select(un_diag(legendre()), spec_range(1, 4));
    CHECK(t[0] == std::vector<Q>{Q(1)});
    CHECK(t[1] == std::vector<Q>{Q(0), Q(1)});
    CHECK(t[2] == std::vector<Q>{Q(-1, 2), Q(0), Q(3, 2)});
    CHECK(t[3] == std::vector<Q>{Q(0), Q(-3, 2), Q(0), Q(5, 2)});
    // chebyshev satisfies the three-term recurrence T(n+1) = 2u T(n) - T(n-1)
    Biv c = un_diag(chebyshev());
    for (std::size_t n = 1; n <= 4; ++n) {
        Poly next = scalar_mul(Q(2), shift(c.nth(n), 1)) - c.nth(n - 1);
        CHECK(prefix_eq(c.nth(n + 1), next, n + 3));
    }
}
