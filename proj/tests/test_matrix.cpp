#include <cmath>
#include <random>

#include "doctest.h"
#include "egoten/matrix.hpp"
#include "egoten/rng.hpp"

using namespace egoten;

TEST_SUITE("matrix") {

TEST_CASE("gram equals the explicit product") {
    auto rng = substream(3, "test.matrix");
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix x(5, 3);
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 3; ++c) x(r, c) = dist(rng);
    Matrix g = gram(x);
    REQUIRE(g.rows() == 3);
    REQUIRE(g.cols() == 3);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            double want = 0.0;
            for (std::size_t r = 0; r < 5; ++r) want += x(r, a) * x(r, b);
            CHECK(g(a, b) == doctest::Approx(want).epsilon(1e-14));
            CHECK(g(a, b) == g(b, a));
        }
}

TEST_CASE("hadamard_inplace multiplies entrywise") {
    Matrix a(2, 2), b(2, 2);
    a(0, 0) = 1; a(0, 1) = 2; a(1, 0) = 3; a(1, 1) = 4;
    b(0, 0) = 5; b(0, 1) = 6; b(1, 0) = 7; b(1, 1) = 0;
    hadamard_inplace(a, b);
    CHECK(a(0, 0) == 5);
    CHECK(a(0, 1) == 12);
    CHECK(a(1, 0) == 21);
    CHECK(a(1, 1) == 0);
}

TEST_CASE("rel_change compares against the previous norm") {
    Matrix prev(1, 2), cur(1, 2);
    prev(0, 0) = 3.0; prev(0, 1) = 4.0;  // norm 5
    cur(0, 0) = 3.0; cur(0, 1) = 4.5;
    CHECK(rel_change(cur, prev) == doctest::Approx(0.1).epsilon(1e-14));
    Matrix z(1, 2);
    z.fill(0.0);
    CHECK(rel_change(z, z) == 0.0);
}

TEST_CASE("cholesky solves spd systems and rejects indefinite ones") {
    // A = [[4,2,0],[2,5,1],[0,1,3]], chosen SPD.
    Matrix a(3, 3);
    a(0, 0) = 4; a(0, 1) = 2; a(0, 2) = 0;
    a(1, 0) = 2; a(1, 1) = 5; a(1, 2) = 1;
    a(2, 0) = 0; a(2, 1) = 1; a(2, 2) = 3;
    Cholesky chol(a);
    double x[3] = {2.0, -1.0, 4.0};  // rhs; solve A y = x
    chol.solve_row_inplace(x);
    // Verify by multiplying back.
    double back[3];
    for (int r = 0; r < 3; ++r)
        back[r] = a(r, 0) * x[0] + a(r, 1) * x[1] + a(r, 2) * x[2];
    CHECK(back[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(back[1] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(back[2] == doctest::Approx(4.0).epsilon(1e-12));

    Matrix bad(2, 2);
    bad(0, 0) = 0.0; bad(0, 1) = 0.0;
    bad(1, 0) = 0.0; bad(1, 1) = 1.0;
    CHECK_THROWS_AS(Cholesky{bad}, SolverError);
}

TEST_CASE("frobenius norms") {
    Matrix m(2, 2);
    m(0, 0) = 3; m(0, 1) = 0; m(1, 0) = 4; m(1, 1) = 0;
    CHECK(frobenius_norm_sq(m) == 25.0);
    CHECK(frobenius_norm(m) == 5.0);
    CHECK(sum_all(m) == 7.0);
}

}  // TEST_SUITE
