#include <doctest.h>

#include <memory>

#include "wha/export.hpp"
#include "wha/verify.hpp"

using namespace wha;

TEST_SUITE("export") {

TEST_CASE("scalar round trip") {
    for (int r = 2; r <= 6; ++r) {
        std::vector<CycloScalar> xs = {CycloScalar(r, 0), CycloScalar(r, 1), CycloScalar(r, Rational(-7, 3)),
                                       quantum_int(r, 2), a_power(r, 3) / CycloScalar(r, 5)};
        for (const auto& x : xs) CHECK(scalar_from_json(r, scalar_to_json(x)) == x);
    }
    CHECK(scalar_to_json(CycloScalar(3, 0)) == R"({"num":[],"den":"1"})");
    CHECK_THROWS_AS(scalar_from_json(3, R"({"num":["x"],"den":"1"})"), InputError);
    CHECK_THROWS_AS(scalar_from_json(3, "[1"), InputError);
}

TEST_CASE("tables round trip byte-identically") {
    for (int r = 2; r <= 4; ++r) {
        auto t = build_tables(r, {});
        auto text = export_tables(t);
        CHECK(export_tables(build_tables(r, {})) == text);
        auto back = import_tables(text);
        CHECK(export_tables(back) == text);
        CHECK(back.has_mu);
        CHECK(back.has_forms);
        CHECK(back.smatrix == t.smatrix);
    }
}

TEST_CASE("imported tables verify like built ones") {
    auto back = std::make_shared<StructureTables>(import_tables(export_tables(build_tables(3, {}))));
    Algebra H(back);
    CHECK(run_suite(H, select_checks({})).passed());
}

TEST_CASE("table selection") {
    auto sel = parse_selection("mu,delta");
    CHECK(sel.mu);
    CHECK(sel.delta);
    CHECK_FALSE(sel.antipode);
    CHECK_FALSE(sel.forms);
    CHECK(parse_selection("s").antipode);
    CHECK_THROWS_AS(parse_selection("mu,bogus"), InputError);
    auto back = import_tables(export_tables(build_tables(3, {}), sel));
    CHECK(back.has_mu);
    CHECK_FALSE(back.has_antipode);
    CHECK_FALSE(back.has_forms);
}

TEST_CASE("malformed documents are rejected") {
    auto text = export_tables(build_tables(2, {}));
    CHECK_THROWS_AS(import_tables("{}"), InputError);
    CHECK_THROWS_AS(import_tables("not json"), InputError);
    auto bad = text;
    bad.replace(bad.find("\"level\": 2"), 10, "\"level\": 3");
    CHECK_THROWS_AS(import_tables(bad), InputError);
}

}  // TEST_SUITE
