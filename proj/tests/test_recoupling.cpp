#include <doctest.h>

#include "wha/recoupling.hpp"

using namespace wha;

TEST_SUITE("recoupling") {

TEST_CASE("admissibility") {
    CHECK(admissible(3, 1, 1, 0));
    CHECK_FALSE(admissible(3, 1, 1, 2));
    CHECK(admissible(5, 1, 2, 3));
    CHECK_FALSE(admissible(5, 1, 2, 2));
    CHECK_FALSE(admissible(5, 0, 1, 3));
    CHECK_FALSE(admissible(5, 3, 3, 2));
}

TEST_CASE("dimensions and thetas agree with nets") {
    for (int r = 2; r <= 6; ++r) {
        const auto& R = RecouplingTables::get(r);
        for (int j = 0; j <= r - 2; ++j) {
            CHECK(R.dim(j) == oracle::dim(r, j));
            CHECK_FALSE(R.dim(j).is_zero());
            CHECK(R.theta(j, j, 0) == R.dim(j));
        }
        for (int a = 0; a <= r - 2; ++a)
            for (int b = 0; b <= r - 2; ++b)
                for (int c = 0; c <= r - 2; ++c) {
                    if (!admissible(r, a, b, c)) continue;
                    auto t = R.theta(a, b, c);
                    CHECK(t == oracle::theta(r, a, b, c));
                    CHECK_FALSE(t.is_zero());
                    CHECK(t == R.theta(b, a, c));
                    CHECK(t == R.theta(c, b, a));
                    CHECK(t == R.theta(a, c, b));
                }
    }
    CHECK(RecouplingTables::get(3).dim(1) == CycloScalar(3, -1));
    CHECK(RecouplingTables::get(3).theta(1, 1, 0) == CycloScalar(3, -1));
    CHECK(RecouplingTables::get(5).dim(1) == -quantum_int(5, 2));
    CHECK_THROWS_AS(RecouplingTables::get(3).theta(1, 1, 2), InputError);
}

TEST_CASE("tetrahedra agree with nets") {
    for (int r = 2; r <= 5; ++r) {
        const auto& R = RecouplingTables::get(r);
        const int n = r - 1;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d)
                        for (int i = 0; i < n; ++i)
                            for (int j = 0; j < n; ++j) {
                                if (!admissible(r, a, b, j) || !admissible(r, c, d, j) || !admissible(r, a, d, i) ||
                                    !admissible(r, b, c, i))
                                    continue;
                                CHECK(R.tet(a, b, c, d, i, j) == oracle::tet(r, a, b, c, d, i, j));
                            }
    }
}

TEST_CASE("recoupling identity") {
    for (int r = 2; r <= 5; ++r) {
        const int n = r - 1;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d)
                        for (int j = 0; j < n; ++j)
                            if (admissible(r, a, b, j) && admissible(r, c, d, j))
                                CHECK(oracle::recoupling_identity_holds(r, a, b, c, d, j));
    }
}

TEST_CASE("crossing eigenvalues and twists") {
    for (int r = 2; r <= 6; ++r) {
        const auto& R = RecouplingTables::get(r);
        for (int a = 0; a <= r - 2; ++a) {
            auto t = oracle::twist(r, a);
            REQUIRE(t.has_value());
            CHECK(*t == R.twist(a));
            for (int b = 0; b <= r - 2; ++b)
                for (int c = 0; c <= r - 2; ++c) {
                    if (!admissible(r, a, b, c)) continue;
                    auto lam = oracle::crossing_eigenvalue(r, a, b, c);
                    REQUIRE(lam.has_value());
                    CHECK(*lam == R.crossing_coeff(a, b, c));
                    auto mirror = oracle::crossing_eigenvalue(r, a, b, c, -1);
                    REQUIRE(mirror.has_value());
                    CHECK(*mirror == R.crossing_coeff(a, b, c).inverse());
                    CHECK(R.crossing_coeff(a, b, c) * R.crossing_coeff(b, a, c) == R.twist(c) / (R.twist(a) * R.twist(b)));
                }
        }
    }
    const auto& R3 = RecouplingTables::get(3);
    CHECK(R3.crossing_coeff(1, 1, 0) == -a_power(3, -3));
    CHECK(R3.twist(1) == -a_power(3, 3));
    CHECK(RecouplingTables::get(4).crossing_coeff(1, 1, 2) == a_power(4, 1));
    CHECK(RecouplingTables::get(4).crossing_coeff(2, 0, 2).is_one());
}

TEST_CASE("Hopf link") {
    const auto& R3 = RecouplingTables::get(3);
    CHECK(R3.hopf_link(0, 0) == CycloScalar(3, 1));
    CHECK(R3.hopf_link(0, 1) == CycloScalar(3, -1));
    CHECK(R3.hopf_link(1, 1) == CycloScalar(3, -1));
    for (int r = 2; r <= 6; ++r) {
        const auto& R = RecouplingTables::get(r);
        for (int i = 0; i <= r - 2; ++i) {
            CHECK(R.hopf_link(0, i) == R.dim(i));
            for (int j = 0; j <= r - 2; ++j) CHECK(R.hopf_link(i, j) == R.hopf_link_formula(i, j));
        }
    }
}

}
