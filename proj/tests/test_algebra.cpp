#include <doctest.h>

#include "wha/algebra.hpp"
#include "wha/recoupling.hpp"

using namespace wha;

namespace {

const Algebra& algebra(int r) {
    static std::map<int, std::unique_ptr<Algebra>> cache;
    auto& slot = cache[r];
    if (!slot) slot = std::make_unique<Algebra>(build_algebra(r, {}));
    return *slot;
}

const std::array<Conventions, 4> kAllConventions{
    Conventions{Conventions::Crossing::Positive, Conventions::Reading::ClosingStrand},
    Conventions{Conventions::Crossing::Negative, Conventions::Reading::ClosingStrand},
    Conventions{Conventions::Crossing::Positive, Conventions::Reading::InnerStrand},
    Conventions{Conventions::Crossing::Negative, Conventions::Reading::InnerStrand},
};

}  // namespace

TEST_SUITE("wha") {

TEST_CASE("basis enumeration") {
    CHECK(enumerate_basis(2).size() == 1);
    CHECK(enumerate_basis(3).size() == 8);
    for (int r = 2; r <= 6; ++r) {
        std::size_t expect = 0;
        for (int j = 0; j <= r - 2; ++j) {
            std::size_t nj = 0;
            for (int p = 0; p <= r - 2; ++p)
                for (int q = 0; q <= r - 2; ++q) nj += admissible(r, p, q, j);
            expect += nj * nj;
        }
        auto b = enumerate_basis(r);
        CHECK(b.size() == expect);
        CHECK(std::is_sorted(b.begin(), b.end()));
    }
}

TEST_CASE("counit, unit and antipode examples at level 3") {
    const auto& H = algebra(3);
    CHECK(H.counit(H.element({1, 0, 1, 1, 0})).is_one());
    CHECK(H.counit(H.element({0, 0, 0, 1, 1})).is_zero());
    CHECK(H.counit(H.unit()) == CycloScalar(3, 2));
    CHECK(H.unit().terms().size() == 4);
    CHECK(H.antipode(H.element({1, 0, 1, 1, 0})) == H.element({1, 1, 0, 0, 1}));
    CHECK(H.antipode(H.element({0, 1, 1, 0, 0})) == H.element({0, 0, 0, 1, 1}));
    CHECK(H.antipode(H.unit()) == H.unit());
    CHECK(H.comultiply(H.element({1, 0, 1, 1, 0})).size() == 2);
    const auto& H2 = algebra(2);
    auto d = H2.comultiply(H2.basis_element(0));
    CHECK(d.size() == 1);
    CHECK(d.begin()->first == std::array<Index, 2>{0, 0});
}

TEST_CASE("unit laws and minimal block") {
    for (int r = 2; r <= 4; ++r) {
        const auto& H = algebra(r);
        for (Index i = 0; i < H.dim(); ++i) {
            auto x = H.basis_element(i);
            CHECK(H.multiply(H.unit(), x) == x);
            CHECK(H.multiply(x, H.unit()) == x);
        }
        for (Index i : H.minimal_subalgebra())
            for (Index k : H.minimal_subalgebra()) {
                const auto& x = H.basis()[i];
                const auto& y = H.basis()[k];
                Element expect = (x.p == y.p && x.r == y.r) ? H.basis_element(i) : Element();
                CHECK(H.multiply(H.basis_element(i), H.basis_element(k)) == expect);
            }
    }
}

TEST_CASE("multiplication agrees with morphism composition") {
    for (int r = 3; r <= 4; ++r) {
        const auto& H = algebra(r);
        for (Index i = 0; i < H.dim(); ++i)
            for (Index k = 0; k < H.dim(); ++k) {
                auto prod = H.multiply(H.basis_element(i), H.basis_element(k));
                for (Index t = 0; t < H.dim(); ++t) {
                    auto expect = oracle::multiply_coefficient(r, H.basis()[i], H.basis()[k], H.basis()[t]);
                    CHECK(prod.coefficient(t) == expect);
                }
            }
    }
}

TEST_CASE("r-form formulas agree with skein evaluation") {
    for (int r = 3; r <= 4; ++r) {
        auto basis = enumerate_basis(r);
        for (const auto& conv : kAllConventions)
            for (const auto& x : basis)
                for (const auto& y : basis) {
                    CHECK(formula::r_form(r, x, y, conv) == oracle::r_form(r, x, y, conv));
                    CHECK(formula::r_bar(r, x, y, conv) == oracle::r_bar(r, x, y, conv));
                }
    }
}

TEST_CASE("ribbon form matches the curl") {
    const auto& H = algebra(3);
    CHECK(H.ribbon_form(H.element({1, 0, 1, 1, 0})) == -a_power(3, 3));
    CHECK(H.ribbon_form(H.unit()) == CycloScalar(3, 2));
    for (int r = 3; r <= 4; ++r) {
        const auto& A = algebra(r);
        for (Index i = 0; i < A.dim(); ++i)
            CHECK(A.ribbon_form(A.basis_element(i)) == oracle::ribbon_form(r, A.basis()[i]));
    }
}

}
