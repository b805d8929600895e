#include <doctest.h>

#include "wha/tl.hpp"

using namespace wha;
using namespace wha::tl;

TEST_SUITE("tl") {

TEST_CASE("basic stacking") {
    const int r = 5;
    CHECK(compose(identity(r, 3), identity(r, 3)) == identity(r, 3));
    CHECK(closure(compose(cup(r, 1), cap(r, 1))) == loop_value(r));
    auto e = cup_cap(r, 2, 1);
    CHECK(compose(e, e) == loop_value(r) * e);
    CHECK(compose(cup(r, 1), cap(r, 1)).terms().begin()->second == loop_value(r));
    CHECK_THROWS_AS(compose(identity(r, 2), identity(r, 3)), InputError);
    auto x = crossing(r, 4, 2);
    for (const auto& [d, c] : x.terms()) CHECK(d.is_planar());
}

TEST_CASE("Temperley-Lieb relations") {
    const int r = 6;
    auto e1 = cup_cap(r, 3, 1), e2 = cup_cap(r, 3, 2);
    CHECK(compose(compose(e1, e2), e1) == e1);
    CHECK(compose(compose(e2, e1), e2) == e2);
    CHECK(tensor(cup_cap(r, 2, 1), identity(r, 1)) == e1);
}

TEST_CASE("Jones-Wenzl projectors") {
    for (int r = 2; r <= 6; ++r)
        for (int n = 0; n <= r - 1; ++n) {
            const auto& p = jones_wenzl(r, n);
            CHECK(compose(p, p) == p);
            for (int i = 1; i < n; ++i) CHECK(compose(cup_cap(r, n, i), p).is_zero());
            CycloScalar dim = (n % 2 ? CycloScalar(r, -1) : CycloScalar(r, 1)) * quantum_int(r, n + 1);
            CHECK(closure(p) == dim);
        }
    auto p2 = jones_wenzl(4, 2);
    CHECK(p2 == identity(4, 2) - loop_value(4).inverse() * cup_cap(4, 2, 1));
    CHECK(jones_wenzl(4, 0).terms().size() == 1);
    CHECK_THROWS_AS(jones_wenzl(3, 3), InputError);
    // Delta_{r-1} closes to zero
    for (int r = 2; r <= 6; ++r) CHECK(closure(jones_wenzl(r, r - 1)).is_zero());
}

TEST_CASE("Kauffman curl") {
    for (int r = 3; r <= 6; ++r) {
        auto kink = partial_trace(crossing(r, 2, 1), 1);
        CHECK(kink == -a_power(r, 3) * identity(r, 1));
        auto mirror = partial_trace(crossing(r, 2, 1, -1), 1);
        CHECK(mirror == -a_power(r, -3) * identity(r, 1));
    }
}

}
