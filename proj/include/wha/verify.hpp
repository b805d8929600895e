#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wha/algebra.hpp"

namespace wha {

struct Scope {
    enum class Kind { Exhaustive, Sampled };
    Kind kind = Kind::Exhaustive;
    std::size_t count = 0;  // cases actually tested
    std::uint64_t seed = 0;
    std::string to_string() const;
};

enum class CheckStatus { Pass, Fail, Skipped };
std::string status_name(CheckStatus s);

struct Witness {
    std::string tuple;
    std::string lhs, rhs;
};

struct CheckResult {
    std::string name;
    Scope scope;
    CheckStatus status = CheckStatus::Pass;
    std::optional<Witness> witness;
    std::string reason;  // why a check was skipped
    double seconds = 0;
};

// A registered check, optionally forced to a sampled scope.
struct CheckSpec {
    std::string name;
    bool force_sampled = false;
};

struct SuiteOptions {
    std::size_t samples = 500;
    std::uint64_t seed = 42;
    int threads = 0;  // 0: worker_threads()
};

struct VerificationReport {
    int level = 0;
    std::size_t dim = 0;
    Conventions conventions;
    std::uint64_t seed = 0;
    std::vector<CheckResult> results;  // sorted by name

    bool passed() const;
    std::size_t failures() const;
    // Deterministic payload; timing is appended only when requested.
    std::string to_json(bool include_timing = false) const;
    std::string summary() const;
};

std::vector<std::string> registered_checks();
// Each pattern is a check name or a suite prefix such as "wba"; unknown
// patterns throw InputError.  Empty selects everything.
std::vector<CheckSpec> select_checks(const std::vector<std::string>& patterns);
VerificationReport run_suite(const Algebra& H, const std::vector<CheckSpec>& specs, const SuiteOptions& opts = {});

// Worker count from WHA_THREADS, defaulting to the hardware concurrency.
int worker_threads();

// The unique crossing/reading combination satisfying the coquasitriangular
// and coribbon axioms.  Level 3 is tried first; if it does not single out
// one combination, level 4 decides.  Throws std::logic_error otherwise.
Conventions pin_conventions(int level = 3);

}  // namespace wha
