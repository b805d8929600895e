#include <doctest.h>

#include <algorithm>
#include <memory>

#include "wha/verify.hpp"

using namespace wha;

namespace {

const CheckResult& find(const VerificationReport& rep, const std::string& name) {
    auto it = std::find_if(rep.results.begin(), rep.results.end(), [&](const CheckResult& c) { return c.name == name; });
    REQUIRE(it != rep.results.end());
    return *it;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("registry is sorted and selection validates names") {
    auto names = registered_checks();
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
    CHECK(select_checks({}).size() == names.size());
    CHECK(select_checks({"wba"}).size() == 7);
    CHECK(select_checks({"wba.unit"}).size() == 1);
    CHECK_THROWS_AS(select_checks({"nonsense"}), InputError);
}

TEST_CASE("level 2 passes everything in dimension 1") {
    auto H = build_algebra(2, {});
    auto rep = run_suite(H, select_checks({}));
    CHECK(rep.dim == 1);
    CHECK(rep.passed());
    for (const auto& c : rep.results) CHECK_MESSAGE(c.status == CheckStatus::Pass, c.name);
}

TEST_CASE("level 3 axiom suites pass exhaustively") {
    auto H = build_algebra(3, {});
    auto rep = run_suite(H, select_checks({"wba", "wha", "coquasi", "coribbon"}));
    CHECK(rep.passed());
    for (const auto& c : rep.results) {
        CHECK_MESSAGE(c.status == CheckStatus::Pass, c.name);
        CHECK(c.scope.kind == Scope::Kind::Exhaustive);
    }
    CHECK(find(rep, "wba.associativity").scope.count == rep.dim * rep.dim * rep.dim);
}

TEST_CASE("JSON report is deterministic") {
    auto H = build_algebra(3, {});
    auto specs = select_checks({"wba", "coribbon"});
    SuiteOptions one{500, 42, 1};
    auto a = run_suite(H, specs, one).to_json();
    auto b = run_suite(H, specs, {}).to_json();
    CHECK(a == b);
    CHECK(a.find("timing_seconds") == std::string::npos);
}

TEST_CASE("forced sampling uses the requested count and seed") {
    auto H = build_algebra(3, {});
    auto rep = run_suite(H, {{"wba.associativity", true}}, {25, 7, 1});
    const auto& c = find(rep, "wba.associativity");
    CHECK(c.scope.kind == Scope::Kind::Sampled);
    CHECK(c.scope.count == 25);
    CHECK(c.scope.seed == 7);
    CHECK(c.status == CheckStatus::Pass);
}

TEST_CASE("conventions are pinned to positive crossing, closing-strand reading") {
    auto c = pin_conventions();
    CHECK(c.crossing == Conventions::Crossing::Positive);
    CHECK(c.reading == Conventions::Reading::ClosingStrand);
}

TEST_CASE("corrupted antipode yields a witness") {
    auto t = std::make_shared<StructureTables>(build_tables(3, {}));
    auto& row = t->antipode.at(1);
    REQUIRE(!row.empty());
    row.front().second *= CycloScalar(3, 2);
    Algebra H(t);
    auto rep = run_suite(H, select_checks({"wha.eq_wha3", "wba.unit"}));
    CHECK_FALSE(rep.passed());
    const auto& bad = find(rep, "wha.eq_wha3");
    CHECK(bad.status == CheckStatus::Fail);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->lhs != bad.witness->rhs);
    CHECK(find(rep, "wba.unit").status == CheckStatus::Pass);
    CHECK(rep.to_json().find("\"witness\"") != std::string::npos);
}

TEST_CASE("missing tables skip dependent checks") {
    auto t = std::make_shared<StructureTables>(build_tables(3, {}, {true, true, false, false}));
    Algebra H(t);
    auto rep = run_suite(H, select_checks({"wba", "wha.eq_wha1", "coribbon"}));
    for (const auto& c : rep.results) {
        if (c.name.starts_with("wba.")) CHECK(c.status == CheckStatus::Pass);
        else CHECK_MESSAGE(c.status == CheckStatus::Skipped, c.name);
    }
}

}  // TEST_SUITE
