#include <doctest.h>

#include <map>
#include <memory>

#include "wha/comodule.hpp"
#include "wha/recoupling.hpp"

using namespace wha;

namespace {

const Algebra& algebra(int r) {
    static std::map<int, std::unique_ptr<Algebra>> cache;
    auto& slot = cache[r];
    if (!slot) slot = std::make_unique<Algebra>(build_algebra(r, {}));
    return *slot;
}

int fusion_rank(int r, int j, int l) {
    int total = 0;
    for (int u = 0; u <= r - 2; ++u)
        if (admissible(r, j, l, u)) total += irreducible_comodule(algebra(r), u).dim();
    return total;
}

}  // namespace

TEST_SUITE("comodule") {

TEST_CASE("irreducible comodule dimensions") {
    const auto& H = algebra(4);
    CHECK(irreducible_comodule(H, 0).dim() == 3);
    CHECK(irreducible_comodule(H, 1).dim() == 4);
    CHECK(irreducible_comodule(H, 2).dim() == 3);
    CHECK_THROWS_AS(irreducible_comodule(H, 3), InputError);
}

TEST_CASE("coaction axioms for irreducible, dual and unit comodules") {
    for (int r = 2; r <= 5; ++r) {
        const auto& H = algebra(r);
        auto U = unit_comodule(H);
        CHECK(U.dim() == r - 1);
        CHECK(satisfies_counit_law(H, U));
        CHECK(satisfies_coassociativity(H, U));
        for (int j = 0; j <= r - 2; ++j) {
            auto V = irreducible_comodule(H, j);
            CHECK(satisfies_counit_law(H, V));
            CHECK(satisfies_coassociativity(H, V));
            auto D = dual_comodule(H, V);
            CHECK(satisfies_counit_law(H, D));
            CHECK(satisfies_coassociativity(H, D));
        }
    }
}

TEST_CASE("truncated tensor products") {
    for (int r = 3; r <= 5; ++r) {
        const auto& H = algebra(r);
        for (int j = 0; j <= r - 2; ++j)
            for (int l = 0; l <= r - 2; ++l) {
                CAPTURE(r);
                CAPTURE(j);
                CAPTURE(l);
                auto V = irreducible_comodule(H, j), W = irreducible_comodule(H, l);
                auto T = truncated_tensor(H, V, W);
                CHECK(T.projector * T.projector == T.projector);
                CHECK(T.product.dim() == fusion_rank(r, j, l));
                CHECK(truncated_coaction_consistent(H, V, W, T));
                CHECK(satisfies_counit_law(H, T.product));
                CHECK(satisfies_coassociativity(H, T.product));
                Element expect;
                for (int u = 0; u <= r - 2; ++u)
                    if (admissible(r, j, l, u)) expect += character(irreducible_comodule(H, u));
                CHECK(character(T.product) == expect);
            }
    }
}

TEST_CASE("braiding is invertible with inverse from r-bar") {
    for (int r = 3; r <= 5; ++r) {
        const auto& H = algebra(r);
        for (int j = 0; j <= r - 2; ++j)
            for (int l = 0; l <= r - 2; ++l) {
                auto V = irreducible_comodule(H, j), W = irreducible_comodule(H, l);
                auto s = braiding_map(H, V, W), si = braiding_inverse(H, V, W);
                const int k = s.cols();
                CHECK(s * si == Matrix::identity(r, k));
                CHECK(si * s == Matrix::identity(r, k));
            }
    }
}

TEST_CASE("triangle identities") {
    for (int r = 2; r <= 5; ++r) {
        const auto& H = algebra(r);
        for (int j = 0; j <= r - 2; ++j) {
            auto V = irreducible_comodule(H, j);
            CHECK(left_triangle_holds(H, V));
            CHECK(right_triangle_holds(H, V));
        }
    }
}

TEST_CASE("trace of identity is the quantum dimension") {
    for (int r = 2; r <= 5; ++r) {
        const auto& H = algebra(r);
        const auto& R = RecouplingTables::get(r);
        for (int j = 0; j <= r - 2; ++j) {
            auto V = irreducible_comodule(H, j);
            CHECK(comodule_trace(H, Matrix::identity(r, V.dim()), V) == R.dim(j));
            CHECK(trace_of_identity_via_character(H, V) == R.dim(j));
        }
    }
}

TEST_CASE("ribbon map acts by the twist") {
    for (int r = 3; r <= 5; ++r) {
        const auto& H = algebra(r);
        const auto& R = RecouplingTables::get(r);
        for (int j = 0; j <= r - 2; ++j) {
            auto V = irreducible_comodule(H, j);
            CHECK(ribbon_map(H, V) == R.twist(j) * Matrix::identity(r, V.dim()));
        }
    }
}

TEST_CASE("trace of the double braiding is the q-tilde entry") {
    for (int r = 3; r <= 4; ++r) {
        const auto& H = algebra(r);
        for (int j = 0; j <= r - 2; ++j)
            for (int l = 0; l <= r - 2; ++l) {
                auto V = irreducible_comodule(H, j), W = irreducible_comodule(H, l);
                auto T = truncated_tensor(H, V, W);
                auto dbl = braiding_map(H, W, V) * braiding_map(H, V, W);
                CHECK(comodule_trace(H, dbl, T.product) == H.tables().smatrix.at(j, l));
            }
    }
}

}  // TEST_SUITE
