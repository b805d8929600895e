#include <doctest.h>

#include <random>

#include "wha/cyclo.hpp"

using namespace wha;

namespace {

CycloScalar random_scalar(int r, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<Rational> c(CycloField::get(r).degree());
    for (auto& x : c) x = Rational(num(rng), den(rng));
    return CycloScalar::from_coefficients(r, c);
}

}  // namespace

TEST_SUITE("cyclo") {

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
    for (int m : {8, 12, 16, 20, 24}) CHECK(cyclotomic_polynomial(m).size() == static_cast<std::size_t>(euler_phi(m) + 1));
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(24) == 8);
}

TEST_CASE("powers of A") {
    for (int r = 2; r <= 8; ++r) {
        CHECK(a_power(r, 4 * r).is_one());
        CHECK(a_power(r, 2 * r) == CycloScalar(r, -1));
        CHECK(a_power(r, 0).is_one());
        CHECK(a_power(r, -1) * a_power(r, 1) == CycloScalar(r, 1));
        CHECK(a_power(r, 1).inverse() == a_power(r, 4 * r - 1));
    }
}

TEST_CASE("quantum integers") {
    for (int r = 2; r <= 8; ++r) {
        CHECK(quantum_int(r, 0).is_zero());
        CHECK(quantum_int(r, 1).is_one());
        CHECK(quantum_int(r, r).is_zero());
        for (int n = -2 * r; n <= 2 * r; ++n) CHECK(quantum_int(r, -n) == -quantum_int(r, n));
        auto den = a_power(r, 2) - a_power(r, -2);
        for (int n = 0; n < r; ++n) CHECK(quantum_int(r, n) * den == a_power(r, 2 * n) - a_power(r, -2 * n));
    }
    CHECK(quantum_int(3, 2) == CycloScalar(3, 1));
    auto z = quantum_int(5, 2).to_complex();
    CHECK(z.real() == doctest::Approx(2 * std::cos(M_PI / 5)));
    CHECK(z.imag() == doctest::Approx(0.0));
    CHECK(quantum_factorial(4, 3) == quantum_int(4, 2) * quantum_int(4, 3));
    CHECK(quantum_factorial(4, 0).is_one());
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(7);
    for (int r = 2; r <= 8; ++r) {
        for (int t = 0; t < 150; ++t) {
            auto a = random_scalar(r, rng), b = random_scalar(r, rng), c = random_scalar(r, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("inverse at level 5") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        auto a = random_scalar(5, rng);
        if (a.is_zero()) continue;
        CHECK((a * a.inverse()).is_one());
    }
    CHECK_THROWS_AS(CycloScalar(5, 0).inverse(), std::domain_error);
}

TEST_CASE("level mismatch and serialization round trip") {
    CHECK_THROWS_AS(CycloScalar(3, 1) + CycloScalar(4, 1), InputError);
    auto x = quantum_int(7, 3) / quantum_int(7, 5);
    CHECK(CycloScalar::from_coefficients(7, x.coefficients()) == x);
    auto [re, im] = a_power(3, 1).to_complex(64);
    CHECK(std::stod(re) == doctest::Approx(std::cos(M_PI / 6)));
    CHECK(std::stod(im) == doctest::Approx(0.5));
}

}
