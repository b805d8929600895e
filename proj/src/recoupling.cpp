#include "wha/recoupling.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <string>

namespace wha {

namespace {

CycloScalar sign_of(int level, long exponent) {
    return CycloScalar(level, (exponent % 2 == 0) ? 1 : -1);
}

std::string labels_str(std::initializer_list<int> xs) {
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

}  // namespace

int label_count(int level) { return level - 1; }

bool admissible(int level, int a, int b, int c) {
    const int top = level - 2;
    if (a < 0 || b < 0 || c < 0 || a > top || b > top || c > top) return false;
    if ((a + b + c) % 2) return false;
    if (a + b < c || b + c < a || c + a < b) return false;
    return a + b + c <= 2 * level - 4;
}

const RecouplingTables& RecouplingTables::get(int level) {
    if (level < 2) throw InputError("level must be at least 2");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<RecouplingTables>> tables;
    std::lock_guard lock(mu);
    auto& slot = tables[level];
    if (!slot) slot = std::make_unique<RecouplingTables>(level);
    return *slot;
}

template <class F>
CycloScalar RecouplingTables::memo(const Key& key, F&& compute) const {
    {
        std::lock_guard lock(mu_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    CycloScalar value = compute();
    std::lock_guard lock(mu_);
    cache_.emplace(key, value);
    return value;
}

void RecouplingTables::require_label(int j) const {
    if (j < 0 || j > level_ - 2) throw InputError("label " + std::to_string(j) + " outside I");
}

void RecouplingTables::require_admissible(int a, int b, int c) const {
    if (!admissible(level_, a, b, c)) throw InputError("inadmissible triple " + labels_str({a, b, c}));
}

CycloScalar RecouplingTables::dim(int j) const {
    require_label(j);
    return memo({0, j}, [&] { return sign_of(level_, j) * quantum_int(level_, j + 1); });
}

CycloScalar RecouplingTables::theta(int a, int b, int c) const {
    require_admissible(a, b, c);
    return memo({1, a, b, c}, [&] {
        const int i = (a + b - c) / 2, j = (b + c - a) / 2, k = (c + a - b) / 2;
        auto f = [&](int n) { return quantum_factorial(level_, n); };
        return sign_of(level_, i + j + k) * f(i + j + k + 1) * f(i) * f(j) * f(k) / (f(i + j) * f(j + k) * f(k + i));
    });
}

// Closed form for Tet[A B E; C D F] with A=a, B=b, C=c, D=d, E=i, F=j.
CycloScalar RecouplingTables::tet(int a, int b, int c, int d, int i, int j) const {
    require_admissible(a, b, j);
    require_admissible(c, d, j);
    require_admissible(a, d, i);
    require_admissible(b, c, i);
    return memo({2, a, b, c, d, i, j}, [&] {
        auto f = [&](int n) { return quantum_factorial(level_, n); };
        const std::array<int, 4> lo{(a + d + i) / 2, (b + c + i) / 2, (a + b + j) / 2, (c + d + j) / 2};
        const std::array<int, 3> hi{(b + d + i + j) / 2, (a + c + i + j) / 2, (a + b + c + d) / 2};
        CycloScalar inner(level_, 1), edges(level_, 1);
        for (int x : lo)
            for (int y : hi) inner *= f(y - x);
        for (int x : {a, b, c, d, i, j}) edges *= f(x);
        const int m = *std::max_element(lo.begin(), lo.end());
        const int M = *std::min_element(hi.begin(), hi.end());
        CycloScalar sum(level_, 0);
        for (int s = m; s <= M; ++s) {
            CycloScalar den(level_, 1);
            for (int x : lo) den *= f(s - x);
            for (int y : hi) den *= f(y - s);
            sum += sign_of(level_, s) * f(s + 1) / den;
        }
        return inner / edges * sum;
    });
}

CycloScalar RecouplingTables::sixj(int a, int b, int i, int c, int d, int j) const {
    return memo({3, a, b, i, c, d, j}, [&] {
        return dim(i) * tet(a, b, c, d, i, j) / (theta(a, d, i) * theta(b, c, i));
    });
}

CycloScalar RecouplingTables::crossing_coeff(int a, int b, int c) const {
    require_admissible(a, b, c);
    return memo({4, a, b, c}, [&] {
        const long e2 = static_cast<long>(c) * (c + 2) - static_cast<long>(a) * (a + 2) - static_cast<long>(b) * (b + 2);
        return sign_of(level_, (a + b - c) / 2) * a_power(level_, e2 / 2);
    });
}

CycloScalar RecouplingTables::twist(int j) const {
    require_label(j);
    return memo({5, j}, [&] { return sign_of(level_, j) * a_power(level_, static_cast<long>(j) * (j + 2)); });
}

CycloScalar RecouplingTables::hopf_link(int i, int j) const {
    require_label(i);
    require_label(j);
    auto key = Key{6, std::min(i, j), std::max(i, j)};
    return memo(key, [&] { return oracle::hopf_link(level_, std::min(i, j), std::max(i, j)); });
}

CycloScalar RecouplingTables::hopf_link_formula(int i, int j) const {
    require_label(i);
    require_label(j);
    CycloScalar acc(level_, 0);
    for (int c = 0; c <= level_ - 2; ++c)
        if (admissible(level_, i, j, c)) acc += dim(c) * twist(c) / (twist(i) * twist(j));
    return acc;
}

namespace oracle {

using namespace tl;

CycloScalar dim(int level, int j) { return closure(jones_wenzl(level, j)); }

CycloScalar theta(int level, int a, int b, int c) {
    return closure(compose(split_vertex(level, c, a, b), merge_vertex(level, a, b, c)));
}

SkeinElement h_net(int level, int a, int b, int c, int d, int j) {
    auto upper = tensor(split_vertex(level, b, a, j), split_vertex(level, c, j, d));
    auto join = tensor(tensor(identity(level, a), cap(level, j)), identity(level, d));
    return compose(upper, join);
}

SkeinElement i_net(int level, int a, int b, int c, int d, int i) {
    return compose(merge_vertex(level, b, c, i), split_vertex(level, i, a, d));
}

CycloScalar tet(int level, int a, int b, int c, int d, int i, int j) {
    auto net = compose(compose(split_vertex(level, i, b, c), h_net(level, a, b, c, d, j)), merge_vertex(level, a, d, i));
    return closure(net);
}

namespace {

std::optional<CycloScalar> proportionality(const SkeinElement& x, const SkeinElement& y) {
    if (y.is_zero()) return std::nullopt;
    const auto& [d0, c0] = *y.terms().begin();
    auto it = x.terms().find(d0);
    CycloScalar lambda = it == x.terms().end() ? CycloScalar(y.level(), 0) : it->second / c0;
    if (!(x == lambda * y)) return std::nullopt;
    return lambda;
}

}  // namespace

std::optional<CycloScalar> crossing_eigenvalue(int level, int a, int b, int c, int sign) {
    auto crossed = compose(split_vertex(level, c, a, b), bundle_crossing(level, a, b, sign));
    return proportionality(crossed, split_vertex(level, c, b, a));
}

std::optional<CycloScalar> twist(int level, int j, int sign) {
    auto kink = compose(tensor(jones_wenzl(level, j), identity(level, j)), bundle_crossing(level, j, j, sign));
    return proportionality(partial_trace(kink, j), jones_wenzl(level, j));
}

CycloScalar hopf_link(int level, int i, int j) {
    auto bundles = tensor(jones_wenzl(level, i), jones_wenzl(level, j));
    auto once = compose(bundles, bundle_crossing(level, i, j));
    return closure(compose(once, bundle_crossing(level, j, i)));
}

bool recoupling_identity_holds(int level, int a, int b, int c, int d, int j) {
    const auto& R = RecouplingTables::get(level);
    auto lhs = h_net(level, a, b, c, d, j);
    SkeinElement rhs(level, b + c, a + d);
    bool truncated = false;
    for (int i = 0; i <= std::min(a + d, b + c); ++i) {
        if ((a + d + i) % 2 || std::abs(a - d) > i || std::abs(b - c) > i) continue;
        if (admissible(level, a, d, i) && admissible(level, b, c, i))
            rhs += R.sixj(a, b, i, c, d, j) * i_net(level, a, b, c, d, i);
        else
            truncated = true;
    }
    // A cut-off channel leaves a negligible remainder, invisible to every closure.
    auto diff = lhs - rhs;
    if (!truncated) return diff.is_zero();
    for (int i = 0; i <= level - 2; ++i) {
        if (!admissible(level, a, d, i) || !admissible(level, b, c, i)) continue;
        auto dual = compose(merge_vertex(level, a, d, i), split_vertex(level, i, b, c));
        if (!closure(compose(diff, dual)).is_zero()) return false;
    }
    return true;
}

}  // namespace oracle

}  // namespace wha
