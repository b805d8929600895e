#include "wha/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "wha/comodule.hpp"
#include "wha/recoupling.hpp"

namespace wha {

std::string Scope::to_string() const {
    if (kind == Kind::Exhaustive) return "exhaustive(" + std::to_string(count) + ")";
    return "sampled(" + std::to_string(count) + ", seed " + std::to_string(seed) + ")";
}

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

int worker_threads() {
    if (const char* env = std::getenv("WHA_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<int>(std::min<long>(v, 256));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using Tuple = std::array<Index, 3>;

struct Mismatch {
    std::string lhs, rhs;
};
using Outcome = std::optional<Mismatch>;

enum Needs : unsigned { kMu = 1, kDelta = 2, kAntipode = 4, kForms = 8, kSmatrix = 16 };

// Basis data shared by all checks of one run.
struct Ctx {
    const Algebra& H;
    const StructureTables& T;
    int r;
    Index n;
    std::vector<Element> e;
    std::vector<Tensor2> d;
    std::vector<Tensor3> d2;  // (Delta (x) id) Delta
    std::vector<Element> s;
    std::vector<CycloScalar> wbar;
    Element one;
    Tensor2 one_delta;

    explicit Ctx(const Algebra& alg) : H(alg), T(alg.tables()), r(alg.level()), n(static_cast<Index>(alg.dim())) {
        for (Index i = 0; i < n; ++i) e.push_back(H.basis_element(i));
        if (T.has_delta) {
            for (Index i = 0; i < n; ++i) d.push_back(H.comultiply_basis(i));
            for (Index i = 0; i < n; ++i) {
                Tensor3 t;
                for (const auto& [k, c] : d[i])
                    for (const auto& [k2, c2] : d[k[0]]) accumulate(t, {k2[0], k2[1], k[1]}, c * c2);
                d2.push_back(std::move(t));
            }
        }
        if (T.has_antipode)
            for (Index i = 0; i < n; ++i) s.push_back(H.antipode(e[i]));
        if (T.has_antipode && T.has_forms)
            for (Index i = 0; i < n; ++i) wbar.push_back(T.w[s[i].terms().begin()->first] * s[i].terms().begin()->second);
        if (T.has_mu && T.has_delta) {
            one = H.unit();
            one_delta = H.comultiply(one);
        }
    }

    CycloScalar zero() const { return CycloScalar(r, 0); }
    CycloScalar eps(Index i) const { return T.counit[i]; }
    CycloScalar eps(const Element& x) const { return H.counit(x); }
    Element mul(Index i, Index k) const { return H.multiply(e[i], e[k]); }
    CycloScalar rf(Index i, Index k) const { return T.r_form.at(i, k); }
    CycloScalar rb(Index i, Index k) const { return T.r_bar.at(i, k); }
    CycloScalar rf(const Element& x, Index k) const {
        CycloScalar acc = zero();
        for (const auto& [i, c] : x.terms()) acc += c * T.r_form.at(i, k);
        return acc;
    }
    CycloScalar rf(Index i, const Element& y) const {
        CycloScalar acc = zero();
        for (const auto& [k, c] : y.terms()) acc += c * T.r_form.at(i, k);
        return acc;
    }
    CycloScalar nu(const Element& x) const {
        CycloScalar acc = zero();
        for (const auto& [i, c] : x.terms()) acc += c * T.nu[i];
        return acc;
    }
    CycloScalar w(const Element& x) const {
        CycloScalar acc = zero();
        for (const auto& [i, c] : x.terms()) acc += c * T.w[i];
        return acc;
    }
};

std::string show(const Ctx&, const CycloScalar& c) { return c.to_string(); }

std::string show(const Ctx& ctx, const Element& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [i, c] : x.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")" + ctx.H.basis()[i].to_string();
    }
    return out;
}

template <std::size_t N>
std::string show(const Ctx& ctx, const std::map<std::array<Index, N>, CycloScalar>& t) {
    if (t.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : t) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        for (std::size_t m = 0; m < N; ++m) out += (m ? "(x)" : "") + ctx.H.basis()[k[m]].to_string();
    }
    return out;
}

template <class T>
Outcome compare(const Ctx& ctx, const T& lhs, const T& rhs) {
    if (lhs == rhs) return std::nullopt;
    return Mismatch{show(ctx, lhs), show(ctx, rhs)};
}

template <class T>
Outcome compare3(const Ctx& ctx, const T& a, const T& b, const T& c) {
    if (auto m = compare(ctx, a, b)) return m;
    return compare(ctx, a, c);
}

Element scaled(const Element& x, const CycloScalar& c) { return c * x; }

struct TupleCheck {
    std::string name;
    int arity;
    unsigned needs;
    std::function<Outcome(const Ctx&, const Tuple&)> fn;
};

struct GlobalOutcome {
    std::size_t cases = 0;
    std::optional<Witness> witness;
};

struct GlobalCheck {
    std::string name;
    int max_level;  // skipped above this level (0: no limit)
    unsigned needs;
    std::function<GlobalOutcome(const Ctx&)> fn;
};

// ---------------------------------------------------------------- tuple checks

std::vector<TupleCheck> tuple_checks() {
    std::vector<TupleCheck> v;
    // unary
    v.push_back({"wba.unit", 1, kMu | kDelta, [](const Ctx& c, const Tuple& t) -> Outcome {
                     const auto& x = c.e[t[0]];
                     return compare3(c, x, c.H.multiply(c.one, x), c.H.multiply(x, c.one));
                 }});
    v.push_back({"wba.counit", 1, kDelta, [](const Ctx& c, const Tuple& t) -> Outcome {
                     Element left, right;
                     for (const auto& [k, x] : c.d[t[0]]) {
                         left.add(k[1], x * c.eps(k[0]));
                         right.add(k[0], x * c.eps(k[1]));
                     }
                     return compare3(c, c.e[t[0]], left, right);
                 }});
    v.push_back({"wba.coassociativity", 1, kDelta, [](const Ctx& c, const Tuple& t) -> Outcome {
                     Tensor3 rhs;
                     for (const auto& [k, x] : c.d[t[0]])
                         for (const auto& [k2, y] : c.d[k[1]]) accumulate(rhs, {k[0], k2[0], k2[1]}, x * y);
                     return compare(c, c.d2[t[0]], rhs);
                 }});
    v.push_back({"wha.eq_wha1", 1, kMu | kDelta | kAntipode, [](const Ctx& c, const Tuple& t) -> Outcome {
                     Element lhs;
                     for (const auto& [k, x] : c.d[t[0]]) lhs += x * c.H.multiply(c.e[k[0]], c.s[k[1]]);
                     return compare(c, lhs, c.H.counital_target(c.e[t[0]]));
                 }});
    v.push_back({"wha.eq_wha2", 1, kMu | kDelta | kAntipode, [](const Ctx& c, const Tuple& t) -> Outcome {
                     Element lhs;
                     for (const auto& [k, x] : c.d[t[0]]) lhs += x * c.H.multiply(c.s[k[0]], c.e[k[1]]);
                     return compare(c, lhs, c.H.counital_source(c.e[t[0]]));
                 }});
    v.push_back({"wha.eq_wha3", 1, kMu | kDelta | kAntipode, [](const Ctx& c, const Tuple& t) -> Outcome {
                     Element lhs;
                     for (const auto& [k, x] : c.d2[t[0]])
                         lhs += x * c.H.multiply(c.H.multiply(c.s[k[0]], c.e[k[1]]), c.s[k[2]]);
                     return compare(c, lhs, c.s[t[0]]);
                 }});
    v.push_back({"wha.counital_idempotent", 1, kMu | kDelta, [](const Ctx& c, const Tuple& t) -> Outcome {
                     auto et = c.H.counital_target(c.e[t[0]]);
                     if (auto m = compare(c, c.H.counital_target(et), et)) return m;
                     auto es = c.H.counital_source(c.e[t[0]]);
                     return compare(c, c.H.counital_source(es), es);
                 }});
    v.push_back({"wha.antipode_counit", 1, kAntipode, [](const Ctx& c, const Tuple& t) -> Outcome {
                     return compare(c, c.eps(c.s[t[0]]), c.eps(t[0]));
                 }});
    v.push_back({"wha.antipode_anticomultiplicative", 1, kDelta | kAntipode, [](const Ctx& c, const Tuple& t) -> Outcome {
                     Tensor2 rhs;
                     for (const auto& [k, x] : c.d[t[0]])
                         for (const auto& [i, a] : c.s[k[1]].terms())
                             for (const auto& [m, b] : c.s[k[0]].terms()) accumulate(rhs, {i, m}, x * a * b);
                     return compare(c, c.H.comultiply(c.s[t[0]]), rhs);
                 }});
    v.push_back({"structure.antipode_square", 1, kAntipode, [](const Ctx& c, const Tuple& t) -> Outcome {
                     const auto& b = c.H.basis()[t[0]];
                     const auto& R = RecouplingTables::get(c.r);
                     auto ratio = R.dim(b.q) * R.dim(b.s) / (R.dim(b.p) * R.dim(b.r));
                     return compare(c, c.H.antipode(c.s[t[0]]), scaled(c.e[t[0]], ratio));
                 }});
    v.push_back({"coribbon.eq_coribbon2", 1, kAntipode | kForms, [](const Ctx& c, const Tuple& t) -> Outcome {
                     return compare(c, c.nu(c.s[t[0]]), c.T.nu[t[0]]);
                 }});
    v.push_back({"coribbon.dual_central", 1, kDelta | kForms, [](const Ctx& c, const Tuple& t) -> Outcome {
                     Element lhs, rhs;
                     for (const auto& [k, x] : c.d[t[0]]) {
                         lhs.add(k[1], x * c.T.nu[k[0]]);
                         rhs.add(k[0], x * c.T.nu[k[1]]);
                     }
                     return compare(c, lhs, rhs);
                 }});
    v.push_back({"coribbon.convolution_inverse", 1, kDelta | kForms, [](const Ctx& c, const Tuple& t) -> Outcome {
                     CycloScalar a = c.zero(), b = c.zero();
                     for (const auto& [k, x] : c.d[t[0]]) {
                         a += x * c.T.nu[k[0]] * c.T.nu_bar[k[1]];
                         b += x * c.T.nu_bar[k[0]] * c.T.nu[k[1]];
                     }
                     return compare3(c, c.eps(t[0]), a, b);
                 }});
    v.push_back({"pivotal.identity", 1, kDelta | kAntipode | kForms, [](const Ctx& c, const Tuple& t) -> Outcome {
                     Element rhs;
                     for (const auto& [k, x] : c.d2[t[0]]) rhs.add(k[1], x * c.wbar[k[0]] * c.T.w[k[2]]);
                     return compare(c, c.H.antipode(c.s[t[0]]), rhs);
                 }});
    v.push_back({"pivotal.identity_mirrored", 1, kDelta | kAntipode | kForms, [](const Ctx& c, const Tuple& t) -> Outcome {
                     Element rhs;
                     for (const auto& [k, x] : c.d2[t[0]]) rhs.add(k[1], x * c.T.w[k[0]] * c.wbar[k[2]]);
                     return compare(c, c.H.antipode(c.s[t[0]]), rhs);
                 }});
    v.push_back({"pivotal.convolution_inverse", 1, kDelta | kAntipode | kForms, [](const Ctx& c, const Tuple& t) -> Outcome {
                     CycloScalar a = c.zero(), b = c.zero();
                     for (const auto& [k, x] : c.d[t[0]]) {
                         a += x * c.T.w[k[0]] * c.wbar[k[1]];
                         b += x * c.wbar[k[0]] * c.T.w[k[1]];
                     }
                     return compare3(c, c.eps(t[0]), a, b);
                 }});
    v.push_back({"pivotal.closed_forms", 1, kForms, [](const Ctx& c, const Tuple& t) -> Outcome {
                     const auto& b = c.H.basis()[t[0]];
                     const auto& R = RecouplingTables::get(c.r);
                     const bool diag = b.p == b.s && b.q == b.r;
                     auto u = diag ? R.twist(b.j).inverse() * R.dim(b.s) / R.dim(b.r) : c.zero();
                     auto vv = diag ? R.twist(b.j).inverse() * R.dim(b.r) / R.dim(b.s) : c.zero();
                     auto w = diag ? R.dim(b.q) / R.dim(b.p) : c.zero();
                     if (auto m = compare(c, c.T.u[t[0]], u)) return m;
                     if (auto m = compare(c, c.T.v[t[0]], vv)) return m;
                     return compare(c, c.T.w[t[0]], w);
                 }});

    // binary
    v.push_back({"wba.eq_wba1", 2, kMu | kDelta, [](const Ctx& c, const Tuple& t) -> Outcome {
                     Tensor2 rhs;
                     for (const auto& [kx, x] : c.d[t[0]])
                         for (const auto& [ky, y] : c.d[t[1]]) {
                             auto a = c.mul(kx[0], ky[0]);
                             if (a.is_zero()) continue;
                             auto b = c.mul(kx[1], ky[1]);
                             for (const auto& [i, ca] : a.terms())
                                 for (const auto& [m, cb] : b.terms()) accumulate(rhs, {i, m}, x * y * ca * cb);
                         }
                     return compare(c, c.H.comultiply(c.mul(t[0], t[1])), rhs);
                 }});
    v.push_back({"wha.antipode_antimultiplicative", 2, kMu | kAntipode, [](const Ctx& c, const Tuple& t) -> Outcome {
                     return compare(c, c.H.antipode(c.mul(t[0], t[1])), c.H.multiply(c.s[t[1]], c.s[t[0]]));
                 }});
    v.push_back({"wha.base_commute", 2, kMu | kDelta, [](const Ctx& c, const Tuple& t) -> Outcome {
                     auto a = c.H.counital_target(c.e[t[0]]);
                     auto b = c.H.counital_source(c.e[t[1]]);
                     return compare(c, c.H.multiply(a, b), c.H.multiply(b, a));
                 }});
    v.push_back({"coquasi.eq_coquasidef", 2, kMu | kDelta | kForms, [](const Ctx& c, const Tuple& t) -> Outcome {
                     CycloScalar a = c.zero(), b = c.zero();
                     for (const auto& [kx, x] : c.d[t[0]])
                         for (const auto& [ky, y] : c.d[t[1]]) {
                             a += x * y * c.eps(c.mul(kx[0], ky[0])) * c.rf(kx[1], ky[1]);
                             b += x * y * c.rf(kx[0], ky[0]) * c.eps(c.mul(ky[1], kx[1]));
                         }
                     return compare3(c, c.rf(t[0], t[1]), a, b);
                 }});
    v.push_back({"coquasi.eq_coquasiinv1", 2, kMu | kDelta | kForms, [](const Ctx& c, const Tuple& t) -> Outcome {
                     CycloScalar a = c.zero();
                     for (const auto& [kx, x] : c.d[t[0]])
                         for (const auto& [ky, y] : c.d[t[1]]) a += x * y * c.rb(kx[0], ky[0]) * c.rf(kx[1], ky[1]);
                     return compare(c, a, c.eps(c.mul(t[1], t[0])));
                 }});
    v.push_back({"coquasi.eq_coquasiinv2", 2, kMu | kDelta | kForms, [](const Ctx& c, const Tuple& t) -> Outcome {
                     CycloScalar a = c.zero();
                     for (const auto& [kx, x] : c.d[t[0]])
                         for (const auto& [ky, y] : c.d[t[1]]) a += x * y * c.rf(kx[0], ky[0]) * c.rb(kx[1], ky[1]);
                     return compare(c, a, c.eps(c.mul(t[0], t[1])));
                 }});
    v.push_back({"coquasi.eq_almostcomm", 2, kMu | kDelta | kForms, [](const Ctx& c, const Tuple& t) -> Outcome {
                     Element lhs, rhs;
                     for (const auto& [kx, x] : c.d[t[0]])
                         for (const auto& [ky, y] : c.d[t[1]]) {
                             auto r1 = c.rf(kx[1], ky[1]);
                             if (!r1.is_zero()) lhs += (x * y * r1) * c.mul(kx[0], ky[0]);
                             auto r2 = c.rf(kx[0], ky[0]);
                             if (!r2.is_zero()) rhs += (x * y * r2) * c.mul(ky[1], kx[1]);
                         }
                     return compare(c, lhs, rhs);
                 }});
    v.push_back({"coribbon.eq_coribbon1", 2, kMu | kDelta | kForms, [](const Ctx& c, const Tuple& t) -> Outcome {
                     CycloScalar rhs = c.zero();
                     for (const auto& [kx, x] : c.d2[t[0]]) {
                         if (c.T.nu[kx[0]].is_zero()) continue;
                         for (const auto& [ky, y] : c.d2[t[1]]) {
                             if (c.T.nu[ky[0]].is_zero()) continue;
                             rhs += x * y * c.T.nu[kx[0]] * c.T.nu[ky[0]] * c.rf(kx[1], ky[1]) * c.rf(ky[2], kx[2]);
                         }
                     }
                     return compare(c, c.nu(c.mul(t[0], t[1])), rhs);
                 }});
    v.push_back({"pivotal.dual_grouplike", 2, kMu | kDelta | kForms, [](const Ctx& c, const Tuple& t) -> Outcome {
                     CycloScalar a = c.zero(), b = c.zero();
                     for (const auto& [kx, x] : c.d[t[0]])
                         for (const auto& [ky, y] : c.d[t[1]]) {
                             a += x * y * c.eps(c.mul(kx[0], ky[0])) * c.T.w[kx[1]] * c.T.w[ky[1]];
                             b += x * y * c.T.w[kx[0]] * c.T.w[ky[0]] * c.eps(c.mul(kx[1], ky[1]));
                         }
                     return compare3(c, c.w(c.mul(t[0], t[1])), a, b);
                 }});

    // ternary
    v.push_back({"wba.associativity", 3, kMu, [](const Ctx& c, const Tuple& t) -> Outcome {
                     return compare(c, c.H.multiply(c.mul(t[0], t[1]), c.e[t[2]]), c.H.multiply(c.e[t[0]], c.mul(t[1], t[2])));
                 }});
    v.push_back({"wba.eq_wba2", 3, kMu | kDelta, [](const Ctx& c, const Tuple& t) -> Outcome {
                     CycloScalar a = c.zero(), b = c.zero();
                     for (const auto& [k, y] : c.d[t[1]]) {
                         a += y * c.eps(c.mul(t[0], k[0])) * c.eps(c.mul(k[1], t[2]));
                         b += y * c.eps(c.mul(t[0], k[1])) * c.eps(c.mul(k[0], t[2]));
                     }
                     return compare3(c, c.eps(c.H.multiply(c.mul(t[0], t[1]), c.e[t[2]])), a, b);
                 }});
    v.push_back({"coquasi.eq_coquasitensor1", 3, kMu | kDelta | kForms, [](const Ctx& c, const Tuple& t) -> Outcome {
                     CycloScalar rhs = c.zero();
                     for (const auto& [k, z] : c.d[t[2]]) rhs += z * c.rf(t[1], k[0]) * c.rf(t[0], k[1]);
                     return compare(c, c.rf(c.mul(t[0], t[1]), t[2]), rhs);
                 }});
    v.push_back({"coquasi.eq_coquasitensor2", 3, kMu | kDelta | kForms, [](const Ctx& c, const Tuple& t) -> Outcome {
                     CycloScalar rhs = c.zero();
                     for (const auto& [k, x] : c.d[t[0]]) rhs += x * c.rf(k[0], t[1]) * c.rf(k[1], t[2]);
                     return compare(c, c.rf(t[0], c.mul(t[1], t[2])), rhs);
                 }});
    return v;
}

// --------------------------------------------------------------- global checks

Witness witness(std::string where, std::string lhs, std::string rhs) { return Witness{std::move(where), std::move(lhs), std::move(rhs)}; }

std::string labels(std::initializer_list<std::pair<const char*, int>> xs) {
    std::string out;
    for (const auto& [k, v] : xs) out += (out.empty() ? "" : " ") + std::string(k) + "=" + std::to_string(v);
    return out;
}

// Expects the loop body to return an optional<Witness>; stops at the first.
struct Counter {
    GlobalOutcome out;
    bool record(std::optional<Witness> w) {
        ++out.cases;
        if (w) out.witness = std::move(w);
        return out.witness.has_value();
    }
};

std::optional<Witness> scalar_case(const std::string& where, const CycloScalar& lhs, const CycloScalar& rhs) {
    if (lhs == rhs) return std::nullopt;
    return witness(where, lhs.to_string(), rhs.to_string());
}

// Associator entry F^{abc}_t[s,u]: ((a b)_s c)_t -> (a (b c)_u)_t.
CycloScalar fmove(const RecouplingTables& R, int a, int b, int c, int t, int s, int u) {
    const int L = R.level();
    if (!admissible(L, a, b, s) || !admissible(L, s, c, t) || !admissible(L, b, c, u) || !admissible(L, a, u, t))
        return CycloScalar(L, 0);
    return R.sixj(b, a, u, t, c, s);
}

// Inverse associator entry G^{abc}_t[u,s].
CycloScalar gmove(const RecouplingTables& R, int a, int b, int c, int t, int u, int s) {
    const int L = R.level();
    if (!admissible(L, a, b, s) || !admissible(L, s, c, t) || !admissible(L, b, c, u) || !admissible(L, a, u, t))
        return CycloScalar(L, 0);
    return R.sixj(a, t, s, c, b, u);
}

std::vector<Comodule> irreducibles(const Ctx& c) {
    std::vector<Comodule> out;
    for (int j = 0; j <= c.r - 2; ++j) out.push_back(irreducible_comodule(c.H, j));
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.level(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    return out;
}

Matrix selection_of(const ImageBasis& img, int plain, int level) {
    Matrix L(level, static_cast<int>(img.pivot_rows.size()), plain);
    for (std::size_t i = 0; i < img.pivot_rows.size(); ++i) L.at(static_cast<int>(i), img.pivot_rows[i]) = CycloScalar(level, 1);
    return L;
}

std::vector<GlobalCheck> global_checks() {
    std::vector<GlobalCheck> v;
    constexpr unsigned kAll = kMu | kDelta | kAntipode | kForms;

    v.push_back({"wba.eq_wba3", 0, kMu | kDelta, [](const Ctx& c) {
                     Counter k;
                     Tensor3 lhs, m1, m2;
                     for (const auto& [a, ca] : c.one_delta)
                         for (const auto& [a2, ca2] : c.d[a[0]]) accumulate(lhs, {a2[0], a2[1], a[1]}, ca * ca2);
                     for (const auto& [a, ca] : c.one_delta)
                         for (const auto& [b, cb] : c.one_delta) {
                             const Element p1 = c.mul(a[1], b[0]), p2 = c.mul(b[0], a[1]);
                             for (const auto& [i, ci] : p1.terms()) accumulate(m1, {a[0], i, b[1]}, ca * cb * ci);
                             for (const auto& [i, ci] : p2.terms()) accumulate(m2, {a[0], i, b[1]}, ca * cb * ci);
                         }
                     if (auto m = compare3(c, lhs, m1, m2)) k.record(witness("eta(1)", m->lhs, m->rhs));
                     else k.record(std::nullopt);
                     return k.out;
                 }});
    v.push_back({"wha.antipode_unit", 0, kMu | kAntipode, [](const Ctx& c) {
                     Counter k;
                     auto one = c.H.unit();
                     k.record(one == c.H.antipode(one) ? std::nullopt
                                                       : std::optional(witness("eta(1)", show(c, c.H.antipode(one)), show(c, one))));
                     return k.out;
                 }});
    v.push_back({"structure.counit_of_unit", 0, kMu, [](const Ctx& c) {
                     Counter k;
                     k.record(scalar_case("eta(1)", c.eps(c.H.unit()), CycloScalar(c.r, c.r - 1)));
                     return k.out;
                 }});
    v.push_back({"structure.base_dimensions", 0, kMu | kDelta, [](const Ctx& c) {
                     Counter k;
                     auto ht = c.H.base_algebra_target().size(), hs = c.H.base_algebra_source().size();
                     const std::size_t want = c.r - 1;
                     if (ht != want || hs != want)
                         k.record(witness("dim H_t, dim H_s", std::to_string(ht) + ", " + std::to_string(hs), std::to_string(want)));
                     else
                         k.record(std::nullopt);
                     return k.out;
                 }});
    v.push_back({"structure.base_intersection", 0, kMu | kDelta, [](const Ctx& c) {
                     Counter k;
                     int d = c.H.intersection_dimension();
                     k.record(d == 1 ? std::nullopt : std::optional(witness("dim(H_t cap H_s)", std::to_string(d), "1")));
                     return k.out;
                 }});
    v.push_back({"structure.base_in_trivial_block", 0, kMu | kDelta, [](const Ctx& c) {
                     Counter k;
                     auto all = c.H.base_algebra_target();
                     auto hs = c.H.base_algebra_source();
                     all.insert(all.end(), hs.begin(), hs.end());
                     for (const auto& x : all) {
                         std::optional<Witness> w;
                         for (const auto& [i, coef] : x.terms())
                             if (c.H.basis()[i].j != 0) w = witness(show(c, x), "block j=" + std::to_string(c.H.basis()[i].j), "block j=0");
                         if (k.record(w)) break;
                     }
                     return k.out;
                 }});
    v.push_back({"structure.minimal_block", 0, kMu, [](const Ctx& c) {
                     Counter k;
                     auto mins = c.H.minimal_subalgebra();
                     const std::size_t want = static_cast<std::size_t>(c.r - 1) * (c.r - 1);
                     if (k.record(mins.size() == want ? std::nullopt
                                                      : std::optional(witness("dim H_min", std::to_string(mins.size()), std::to_string(want)))))
                         return k.out;
                     for (Index i : mins)
                         for (Index m : mins) {
                             const auto& x = c.H.basis()[i];
                             const auto& y = c.H.basis()[m];
                             Element expect = (x.p == y.p && x.r == y.r) ? c.e[i] : Element();
                             auto got = c.mul(i, m);
                             if (k.record(got == expect ? std::nullopt
                                                        : std::optional(witness(x.to_string() + " * " + y.to_string(), show(c, got), show(c, expect)))))
                                 return k.out;
                         }
                     return k.out;
                 }});
    v.push_back({"structure.regularity", 0, kAntipode, [](const Ctx& c) {
                     Counter k;
                     for (Index i : c.H.minimal_subalgebra()) {
                         auto s2 = c.H.antipode(c.s[i]);
                         if (k.record(s2 == c.e[i] ? std::nullopt : std::optional(witness(c.H.basis()[i].to_string(), show(c, s2), show(c, c.e[i])))))
                             break;
                     }
                     return k.out;
                 }});
    v.push_back({"coquasi.unit_pairing", 0, kMu | kDelta | kForms, [](const Ctx& c) {
                     Counter k;
                     CycloScalar acc = c.zero();
                     for (const auto& [a, ca] : c.one_delta)
                         for (const auto& [b, cb] : c.one_delta) acc += ca * cb * c.rb(a[0], b[0]) * c.rf(a[1], b[1]);
                     k.record(scalar_case("eta(1) (x) eta(1)", acc, CycloScalar(c.r, c.r - 1)));
                     return k.out;
                 }});
    v.push_back({"modular.smatrix_identity", 0, kAll | kSmatrix, [](const Ctx& c) {
                     Counter k;
                     auto direct = c.H.try_qtilde_matrix();
                     if (!direct) {
                         k.record(witness("q~ identity", "not a multiple of eta(1)", "c eta(1)"));
                         return k.out;
                     }
                     auto via = c.H.qtilde_matrix_via_counit();
                     for (int a = 0; a < direct->rows(); ++a)
                         for (int b = 0; b < direct->cols(); ++b) {
                             auto where = labels({{"i", a}, {"j", b}});
                             if (k.record(scalar_case(where, c.T.smatrix.at(a, b), direct->at(a, b)))) return k.out;
                             if (k.record(scalar_case(where + " via counit", via.at(a, b), direct->at(a, b)))) return k.out;
                         }
                     return k.out;
                 }});
    v.push_back({"modular.cofactorizable", 0, kSmatrix, [](const Ctx& c) {
                     Counter k;
                     auto det = determinant(c.T.smatrix);
                     k.record(det.is_zero() ? std::optional(witness("det q~", "0", "nonzero")) : std::nullopt);
                     return k.out;
                 }});
    v.push_back({"modular.hopf_link_proportional", 0, kSmatrix, [](const Ctx& c) {
                     Counter k;
                     const auto& R = RecouplingTables::get(c.r);
                     const auto& S = c.T.smatrix;
                     CycloScalar factor = S.at(0, 0) / R.hopf_link(0, 0);
                     if (k.record(factor.is_zero() ? std::optional(witness("i=0 j=0", "0", "nonzero")) : std::nullopt)) return k.out;
                     for (int a = 0; a < S.rows(); ++a)
                         for (int b = 0; b < S.cols(); ++b)
                             if (k.record(scalar_case(labels({{"i", a}, {"j", b}}), S.at(a, b), factor * R.hopf_link(a, b))))
                                 return k.out;
                     return k.out;
                 }});

    // recoupling and tl oracles
    v.push_back({"recoupling.dim_oracle", 6, 0, [](const Ctx& c) {
                     Counter k;
                     const auto& R = RecouplingTables::get(c.r);
                     for (int j = 0; j <= c.r - 2; ++j)
                         if (k.record(scalar_case(labels({{"j", j}}), R.dim(j), oracle::dim(c.r, j)))) break;
                     return k.out;
                 }});
    v.push_back({"recoupling.theta_oracle", 6, 0, [](const Ctx& c) {
                     Counter k;
                     const auto& R = RecouplingTables::get(c.r);
                     for (int a = 0; a <= c.r - 2; ++a)
                         for (int b = 0; b <= c.r - 2; ++b)
                             for (int x = 0; x <= c.r - 2; ++x)
                                 if (admissible(c.r, a, b, x) &&
                                     k.record(scalar_case(labels({{"a", a}, {"b", b}, {"c", x}}), R.theta(a, b, x), oracle::theta(c.r, a, b, x))))
                                     return k.out;
                     return k.out;
                 }});
    v.push_back({"recoupling.theta_symmetry", 0, 0, [](const Ctx& c) {
                     Counter k;
                     const auto& R = RecouplingTables::get(c.r);
                     for (int a = 0; a <= c.r - 2; ++a)
                         for (int b = 0; b <= c.r - 2; ++b)
                             for (int x = 0; x <= c.r - 2; ++x) {
                                 if (!admissible(c.r, a, b, x)) continue;
                                 auto where = labels({{"a", a}, {"b", b}, {"c", x}});
                                 if (k.record(scalar_case(where, R.theta(a, b, x), R.theta(b, a, x))) ||
                                     k.record(scalar_case(where, R.theta(a, b, x), R.theta(x, b, a))))
                                     return k.out;
                             }
                     return k.out;
                 }});
    v.push_back({"recoupling.nonvanishing", 0, 0, [](const Ctx& c) {
                     Counter k;
                     const auto& R = RecouplingTables::get(c.r);
                     for (int j = 0; j <= c.r - 2; ++j)
                         if (k.record(R.dim(j).is_zero() ? std::optional(witness(labels({{"j", j}}), "Delta_j = 0", "nonzero")) : std::nullopt))
                             return k.out;
                     for (int a = 0; a <= c.r - 2; ++a)
                         for (int b = 0; b <= c.r - 2; ++b)
                             for (int x = 0; x <= c.r - 2; ++x)
                                 if (admissible(c.r, a, b, x) &&
                                     k.record(R.theta(a, b, x).is_zero()
                                                  ? std::optional(witness(labels({{"a", a}, {"b", b}, {"c", x}}), "theta = 0", "nonzero"))
                                                  : std::nullopt))
                                     return k.out;
                     return k.out;
                 }});
    v.push_back({"recoupling.tet_oracle", 5, 0, [](const Ctx& c) {
                     Counter k;
                     const auto& R = RecouplingTables::get(c.r);
                     const int n = c.r - 1;
                     for (int a = 0; a < n; ++a)
                         for (int b = 0; b < n; ++b)
                             for (int x = 0; x < n; ++x)
                                 for (int d = 0; d < n; ++d)
                                     for (int i = 0; i < n; ++i)
                                         for (int j = 0; j < n; ++j) {
                                             if (!admissible(c.r, a, b, j) || !admissible(c.r, x, d, j) || !admissible(c.r, a, d, i) ||
                                                 !admissible(c.r, b, x, i))
                                                 continue;
                                             auto where = labels({{"a", a}, {"b", b}, {"c", x}, {"d", d}, {"i", i}, {"j", j}});
                                             if (k.record(scalar_case(where, R.tet(a, b, x, d, i, j), oracle::tet(c.r, a, b, x, d, i, j))))
                                                 return k.out;
                                         }
                     return k.out;
                 }});
    v.push_back({"recoupling.recoupling_identity", 5, 0, [](const Ctx& c) {
                     Counter k;
                     const int n = c.r - 1;
                     for (int a = 0; a < n; ++a)
                         for (int b = 0; b < n; ++b)
                             for (int x = 0; x < n; ++x)
                                 for (int d = 0; d < n; ++d)
                                     for (int j = 0; j < n; ++j)
                                         if (admissible(c.r, a, b, j) && admissible(c.r, x, d, j) &&
                                             k.record(oracle::recoupling_identity_holds(c.r, a, b, x, d, j)
                                                          ? std::nullopt
                                                          : std::optional(witness(labels({{"a", a}, {"b", b}, {"c", x}, {"d", d}, {"j", j}}),
                                                                                  "H-net", "sum_i {a b i; c d j} I-net"))))
                                             return k.out;
                     return k.out;
                 }});
    v.push_back({"recoupling.orthogonality", 4, 0, [](const Ctx& c) {
                     Counter k;
                     const auto& R = RecouplingTables::get(c.r);
                     const int n = c.r - 1;
                     for (int a = 0; a < n; ++a)
                         for (int b = 0; b < n; ++b)
                             for (int x = 0; x < n; ++x)
                                 for (int t = 0; t < n; ++t)
                                     for (int s = 0; s < n; ++s) {
                                         if (!admissible(c.r, a, b, s) || !admissible(c.r, s, x, t)) continue;
                                         for (int s2 = 0; s2 < n; ++s2) {
                                             if (!admissible(c.r, a, b, s2) || !admissible(c.r, s2, x, t)) continue;
                                             CycloScalar acc = c.zero();
                                             for (int u = 0; u < n; ++u) acc += fmove(R, a, b, x, t, s, u) * gmove(R, a, b, x, t, u, s2);
                                             auto where = labels({{"a", a}, {"b", b}, {"c", x}, {"t", t}, {"s", s}, {"s'", s2}});
                                             if (k.record(scalar_case(where, acc, CycloScalar(c.r, s == s2 ? 1 : 0)))) return k.out;
                                         }
                                     }
                     return k.out;
                 }});
    v.push_back({"recoupling.pentagon", 4, 0, [](const Ctx& c) {
                     Counter k;
                     const auto& R = RecouplingTables::get(c.r);
                     const int n = c.r - 1;
                     for (int a = 0; a < n; ++a)
                         for (int b = 0; b < n; ++b)
                             for (int x = 0; x < n; ++x)
                                 for (int d = 0; d < n; ++d)
                                     for (int e = 0; e < n; ++e)
                                         for (int p = 0; p < n; ++p)      // (a b)
                                             for (int y = 0; y < n; ++y)  // ((a b) c)
                                             {
                                                 if (!admissible(c.r, a, b, p) || !admissible(c.r, p, x, y) || !admissible(c.r, y, d, e))
                                                     continue;
                                                 for (int z = 0; z < n; ++z)      // (c d)
                                                     for (int w = 0; w < n; ++w) {  // (b (c d))
                                                         if (!admissible(c.r, x, d, z) || !admissible(c.r, b, z, w) || !admissible(c.r, a, w, e))
                                                             continue;
                                                         auto lhs = fmove(R, p, x, d, e, y, z) * fmove(R, a, b, z, e, p, w);
                                                         CycloScalar rhs = c.zero();
                                                         for (int u = 0; u < n; ++u)
                                                             rhs += fmove(R, a, b, x, y, p, u) * fmove(R, a, u, d, e, y, w) * fmove(R, b, x, d, w, u, z);
                                                         auto where = labels({{"a", a}, {"b", b}, {"c", x}, {"d", d}, {"e", e}, {"x", p},
                                                                              {"y", y}, {"z", z}, {"w", w}});
                                                         if (k.record(scalar_case(where, lhs, rhs))) return k.out;
                                                     }
                                             }
                     return k.out;
                 }});
    v.push_back({"recoupling.ribbon_relation", 0, 0, [](const Ctx& c) {
                     Counter k;
                     const auto& R = RecouplingTables::get(c.r);
                     for (int a = 0; a <= c.r - 2; ++a)
                         for (int b = 0; b <= c.r - 2; ++b)
                             for (int x = 0; x <= c.r - 2; ++x)
                                 if (admissible(c.r, a, b, x) &&
                                     k.record(scalar_case(labels({{"a", a}, {"b", b}, {"c", x}}), R.crossing_coeff(a, b, x) * R.crossing_coeff(b, a, x),
                                                          R.twist(x) / (R.twist(a) * R.twist(b)))))
                                     return k.out;
                     return k.out;
                 }});
    v.push_back({"recoupling.crossing_oracle", 6, 0, [](const Ctx& c) {
                     Counter k;
                     const auto& R = RecouplingTables::get(c.r);
                     for (int a = 0; a <= c.r - 2; ++a)
                         for (int b = 0; b <= c.r - 2; ++b)
                             for (int x = 0; x <= c.r - 2; ++x) {
                                 if (!admissible(c.r, a, b, x)) continue;
                                 auto lam = oracle::crossing_eigenvalue(c.r, a, b, x);
                                 auto where = labels({{"a", a}, {"b", b}, {"c", x}});
                                 if (k.record(lam ? scalar_case(where, *lam, R.crossing_coeff(a, b, x))
                                                  : std::optional(witness(where, "not an eigenvector", R.crossing_coeff(a, b, x).to_string()))))
                                     return k.out;
                             }
                     return k.out;
                 }});
    v.push_back({"recoupling.twist_oracle", 6, 0, [](const Ctx& c) {
                     Counter k;
                     const auto& R = RecouplingTables::get(c.r);
                     for (int j = 0; j <= c.r - 2; ++j) {
                         auto t = oracle::twist(c.r, j);
                         auto where = labels({{"j", j}});
                         if (k.record(t ? scalar_case(where, *t, R.twist(j)) : std::optional(witness(where, "not proportional", R.twist(j).to_string()))))
                             break;
                     }
                     return k.out;
                 }});
    v.push_back({"recoupling.hopf_link_formula", 6, 0, [](const Ctx& c) {
                     Counter k;
                     const auto& R = RecouplingTables::get(c.r);
                     for (int i = 0; i <= c.r - 2; ++i)
                         for (int j = 0; j <= c.r - 2; ++j)
                             if (k.record(scalar_case(labels({{"i", i}, {"j", j}}), R.hopf_link(i, j), R.hopf_link_formula(i, j)))) return k.out;
                     return k.out;
                 }});
    v.push_back({"recoupling.hopf_invertible", 6, 0, [](const Ctx& c) {
                     Counter k;
                     const auto& R = RecouplingTables::get(c.r);
                     Matrix m(c.r, c.r - 1, c.r - 1);
                     for (int i = 0; i <= c.r - 2; ++i)
                         for (int j = 0; j <= c.r - 2; ++j) m.at(i, j) = R.hopf_link(i, j);
                     k.record(determinant(m).is_zero() ? std::optional(witness("det S", "0", "nonzero")) : std::nullopt);
                     return k.out;
                 }});
    v.push_back({"tl.jw_idempotent", 6, 0, [](const Ctx& c) {
                     Counter k;
                     for (int m = 0; m <= c.r - 1; ++m) {
                         const auto& p = tl::jones_wenzl(c.r, m);
                         bool ok = tl::compose(p, p) == p;
                         if (k.record(ok ? std::nullopt : std::optional(witness(labels({{"n", m}}), "p_n p_n", "p_n")))) break;
                     }
                     return k.out;
                 }});
    v.push_back({"tl.jw_cap_killed", 6, 0, [](const Ctx& c) {
                     Counter k;
                     for (int m = 0; m <= c.r - 1; ++m)
                         for (int i = 1; i < m; ++i) {
                             bool ok = tl::compose(tl::cup_cap(c.r, m, i), tl::jones_wenzl(c.r, m)).is_zero();
                             if (k.record(ok ? std::nullopt : std::optional(witness(labels({{"n", m}, {"i", i}}), "e_i p_n nonzero", "0"))))
                                 return k.out;
                         }
                     return k.out;
                 }});
    v.push_back({"tl.jw_trace", 6, 0, [](const Ctx& c) {
                     Counter k;
                     const auto& R = RecouplingTables::get(c.r);
                     for (int m = 0; m <= c.r - 1; ++m) {
                         auto expect = m <= c.r - 2 ? R.dim(m) : c.zero();
                         if (k.record(scalar_case(labels({{"n", m}}), tl::closure(tl::jones_wenzl(c.r, m)), expect))) break;
                     }
                     return k.out;
                 }});
    v.push_back({"tl.curl", 0, 0, [](const Ctx& c) {
                     Counter k;
                     for (int sign : {+1, -1}) {
                         auto kink = tl::partial_trace(tl::crossing(c.r, 2, 1, sign), 1);
                         auto expect = -a_power(c.r, 3 * sign) * tl::identity(c.r, 1);
                         if (k.record(kink == expect ? std::nullopt
                                                     : std::optional(witness(labels({{"sign", sign}}), kink.to_string(), expect.to_string()))))
                             break;
                     }
                     return k.out;
                 }});

    // comodule layer
    v.push_back({"comodule.axioms", 5, kAll, [](const Ctx& c) {
                     Counter k;
                     auto U = unit_comodule(c.H);
                     if (k.record(satisfies_counit_law(c.H, U) && satisfies_coassociativity(c.H, U)
                                      ? std::nullopt
                                      : std::optional(witness("H_s", "coaction axioms fail", "hold"))))
                         return k.out;
                     auto irr = irreducibles(c);
                     for (int j = 0; j < static_cast<int>(irr.size()); ++j) {
                         auto D = dual_comodule(c.H, irr[j]);
                         bool ok = satisfies_counit_law(c.H, irr[j]) && satisfies_coassociativity(c.H, irr[j]) && satisfies_counit_law(c.H, D) &&
                                   satisfies_coassociativity(c.H, D);
                         if (k.record(ok ? std::nullopt : std::optional(witness(labels({{"j", j}}), "coaction axioms fail", "hold")))) break;
                     }
                     return k.out;
                 }});
    auto pairwise = [](std::function<std::optional<Witness>(const Ctx&, const std::vector<Comodule>&, int, int)> body) {
        return [body](const Ctx& c) {
            Counter k;
            auto irr = irreducibles(c);
            for (int j = 0; j < static_cast<int>(irr.size()); ++j)
                for (int l = 0; l < static_cast<int>(irr.size()); ++l)
                    if (k.record(body(c, irr, j, l))) return k.out;
            return k.out;
        };
    };
    v.push_back({"comodule.truncation_idempotent", 5, kAll,
                 pairwise([](const Ctx& c, const std::vector<Comodule>& irr, int j, int l) -> std::optional<Witness> {
                     auto P = truncation_idempotent(c.H, irr[j], irr[l]);
                     if (P * P == P) return std::nullopt;
                     return witness(labels({{"j", j}, {"l", l}}), "P^2", "P");
                 })});
    v.push_back({"comodule.truncated_coaction", 5, kAll,
                 pairwise([](const Ctx& c, const std::vector<Comodule>& irr, int j, int l) -> std::optional<Witness> {
                     auto T = truncated_tensor(c.H, irr[j], irr[l]);
                     bool ok = truncated_coaction_consistent(c.H, irr[j], irr[l], T) && satisfies_counit_law(c.H, T.product) &&
                               satisfies_coassociativity(c.H, T.product);
                     if (ok) return std::nullopt;
                     return witness(labels({{"j", j}, {"l", l}}), "image of P is not a subcomodule", "subcomodule");
                 })});
    v.push_back({"comodule.fusion_multiplicity", 5, kAll,
                 pairwise([](const Ctx& c, const std::vector<Comodule>& irr, int j, int l) -> std::optional<Witness> {
                     auto T = truncated_tensor(c.H, irr[j], irr[l]);
                     Element expect;
                     int rank_expect = 0;
                     for (int u = 0; u < static_cast<int>(irr.size()); ++u)
                         if (admissible(c.r, j, l, u)) {
                             expect += character(irr[u]);
                             rank_expect += irr[u].dim();
                         }
                     auto where = labels({{"j", j}, {"l", l}});
                     if (T.product.dim() != rank_expect) return witness(where, "rank " + std::to_string(T.product.dim()), "rank " + std::to_string(rank_expect));
                     auto chi = character(T.product);
                     if (chi == expect) return std::nullopt;
                     return witness(where, show(c, chi), show(c, expect));
                 })});
    v.push_back({"comodule.braiding_inverse", 5, kAll,
                 pairwise([](const Ctx& c, const std::vector<Comodule>& irr, int j, int l) -> std::optional<Witness> {
                     auto s = braiding_map(c.H, irr[j], irr[l]);
                     auto si = braiding_inverse(c.H, irr[j], irr[l]);
                     auto id = Matrix::identity(c.r, s.cols());
                     if (s * si == id && si * s == id) return std::nullopt;
                     return witness(labels({{"j", j}, {"l", l}}), "sigma sigma^-1 != id", "id");
                 })});
    v.push_back({"comodule.triangle", 5, kAll, [](const Ctx& c) {
                     Counter k;
                     auto irr = irreducibles(c);
                     for (int j = 0; j < static_cast<int>(irr.size()); ++j) {
                         bool ok = left_triangle_holds(c.H, irr[j]) && right_triangle_holds(c.H, irr[j]);
                         if (k.record(ok ? std::nullopt : std::optional(witness(labels({{"j", j}}), "zig-zag composite", "id")))) break;
                     }
                     return k.out;
                 }});
    v.push_back({"comodule.trace_dimension", 5, kAll, [](const Ctx& c) {
                     Counter k;
                     const auto& R = RecouplingTables::get(c.r);
                     auto irr = irreducibles(c);
                     for (int j = 0; j < static_cast<int>(irr.size()); ++j) {
                         auto tr = comodule_trace(c.H, Matrix::identity(c.r, irr[j].dim()), irr[j]);
                         if (k.record(scalar_case(labels({{"j", j}}), tr, R.dim(j)))) break;
                     }
                     return k.out;
                 }});
    v.push_back({"comodule.trace_characters", 5, kAll, [](const Ctx& c) {
                     Counter k;
                     auto irr = irreducibles(c);
                     for (int j = 0; j < static_cast<int>(irr.size()); ++j) {
                         auto tr = comodule_trace(c.H, Matrix::identity(c.r, irr[j].dim()), irr[j]);
                         if (k.record(scalar_case(labels({{"j", j}}), trace_of_identity_via_character(c.H, irr[j]), tr))) break;
                     }
                     return k.out;
                 }});
    v.push_back({"comodule.ribbon_scalar", 5, kAll, [](const Ctx& c) {
                     Counter k;
                     const auto& R = RecouplingTables::get(c.r);
                     auto irr = irreducibles(c);
                     for (int j = 0; j < static_cast<int>(irr.size()); ++j) {
                         bool ok = ribbon_map(c.H, irr[j]) == R.twist(j) * Matrix::identity(c.r, irr[j].dim());
                         if (k.record(ok ? std::nullopt : std::optional(witness(labels({{"j", j}}), "nu_V", "t_j id")))) break;
                     }
                     return k.out;
                 }});
    v.push_back({"comodule.trace_qtilde", 4, kAll | kSmatrix,
                 pairwise([](const Ctx& c, const std::vector<Comodule>& irr, int j, int l) -> std::optional<Witness> {
                     auto T = truncated_tensor(c.H, irr[j], irr[l]);
                     auto dbl = braiding_map(c.H, irr[l], irr[j]) * braiding_map(c.H, irr[j], irr[l]);
                     return scalar_case(labels({{"j", j}, {"l", l}}), comodule_trace(c.H, dbl, T.product), c.T.smatrix.at(j, l));
                 })});
    v.push_back({"comodule.trace_cyclic", 4, kAll,
                 pairwise([](const Ctx& c, const std::vector<Comodule>& irr, int j, int l) -> std::optional<Witness> {
                     // tr(sigma_{W,V} sigma_{V,W}) on V(x)W equals tr(sigma_{V,W} sigma_{W,V}) on W(x)V
                     auto VW = truncated_tensor(c.H, irr[j], irr[l]);
                     auto WV = truncated_tensor(c.H, irr[l], irr[j]);
                     auto a = braiding_map(c.H, irr[j], irr[l]);
                     auto b = braiding_map(c.H, irr[l], irr[j]);
                     return scalar_case(labels({{"j", j}, {"l", l}}), comodule_trace(c.H, b * a, VW.product), comodule_trace(c.H, a * b, WV.product));
                 })});
    v.push_back({"comodule.ribbon_tensor", 4, kAll,
                 pairwise([](const Ctx& c, const std::vector<Comodule>& irr, int j, int l) -> std::optional<Witness> {
                     const auto& V = irr[j];
                     const auto& W = irr[l];
                     auto T = truncated_tensor(c.H, V, W);
                     auto twist_pair = selection_of(T.image, V.dim() * W.dim(), c.r) * kron(ribbon_map(c.H, V), ribbon_map(c.H, W)) * T.image.basis;
                     auto rhs = braiding_map(c.H, W, V) * braiding_map(c.H, V, W) * twist_pair;
                     if (ribbon_map(c.H, T.product) == rhs) return std::nullopt;
                     return witness(labels({{"j", j}, {"l", l}}), "nu_{V(x)W}", "sigma sigma (nu_V (x) nu_W)");
                 })});
    return v;
}

int exhaustive_limit(int arity) {
    switch (arity) {
        case 1: return 6;
        case 2: return 5;
        default: return 4;
    }
}

unsigned available(const StructureTables& t) {
    unsigned m = 0;
    if (t.has_mu) m |= kMu;
    if (t.has_delta) m |= kDelta;
    if (t.has_antipode) m |= kAntipode;
    if (t.has_forms) m |= kForms;
    if (t.smatrix.rows() > 0) m |= kSmatrix;
    return m;
}

std::string missing_reason(unsigned missing) {
    std::vector<std::string> parts;
    if (missing & kMu) parts.push_back("mu");
    if (missing & kDelta) parts.push_back("delta");
    if (missing & kAntipode) parts.push_back("antipode");
    if (missing & kForms) parts.push_back("forms");
    if (missing & kSmatrix) parts.push_back("smatrix");
    std::string out = "tables lack";
    for (const auto& p : parts) out += " " + p;
    return out;
}

std::string tuple_string(const Ctx& c, const Tuple& t, int arity) {
    std::string out;
    for (int i = 0; i < arity; ++i) out += (i ? " , " : "") + c.H.basis()[t[i]].to_string();
    return out;
}

CheckResult run_tuple_check(const Ctx& c, const TupleCheck& chk, bool force_sampled, const SuiteOptions& opts, int threads) {
    CheckResult res;
    res.name = chk.name;
    const bool exhaustive = !force_sampled && c.r <= exhaustive_limit(chk.arity);
    std::vector<Tuple> sample;
    std::size_t total = 1;
    for (int i = 0; i < chk.arity; ++i) total *= c.n;
    if (!exhaustive) {
        std::mt19937_64 rng(opts.seed);
        sample.resize(opts.samples);
        for (auto& t : sample) {
            t = {0, 0, 0};
            for (int i = 0; i < chk.arity; ++i) t[i] = static_cast<Index>(rng() % c.n);
        }
        total = sample.size();
        res.scope = {Scope::Kind::Sampled, total, opts.seed};
    } else {
        res.scope = {Scope::Kind::Exhaustive, total, 0};
    }
    auto tuple_at = [&](std::size_t pos) {
        if (!exhaustive) return sample[pos];
        Tuple t{0, 0, 0};
        for (int i = chk.arity - 1; i >= 0; --i) {
            t[i] = static_cast<Index>(pos % c.n);
            pos /= c.n;
        }
        return t;
    };

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_fail{std::numeric_limits<std::size_t>::max()};
    constexpr std::size_t chunk = 16;
    auto worker = [&] {
        for (;;) {
            std::size_t begin = next.fetch_add(chunk);
            if (begin >= total || begin > first_fail.load()) return;
            for (std::size_t pos = begin; pos < std::min(total, begin + chunk); ++pos) {
                if (pos > first_fail.load()) return;
                if (chk.fn(c, tuple_at(pos))) {
                    std::size_t cur = first_fail.load();
                    while (pos < cur && !first_fail.compare_exchange_weak(cur, pos)) {
                    }
                    return;
                }
            }
        }
    };
    const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>((total + chunk - 1) / chunk)));
    std::vector<std::thread> pool;
    for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    if (first_fail.load() == std::numeric_limits<std::size_t>::max()) return res;

    // Shrink: lower each coordinate while the check keeps failing.
    Tuple t = tuple_at(first_fail.load());
    for (int i = 0; i < chk.arity; ++i)
        for (Index cand = 0; cand < t[i]; ++cand) {
            Tuple trial = t;
            trial[i] = cand;
            if (chk.fn(c, trial)) {
                t = trial;
                break;
            }
        }
    auto m = chk.fn(c, t);
    res.status = CheckStatus::Fail;
    res.witness = Witness{tuple_string(c, t, chk.arity), m->lhs, m->rhs};
    return res;
}

struct Registry {
    std::vector<TupleCheck> tuples = tuple_checks();
    std::vector<GlobalCheck> globals = global_checks();
};

const Registry& registry() {
    static const Registry reg;
    return reg;
}

}  // namespace

std::vector<std::string> registered_checks() {
    std::vector<std::string> out;
    for (const auto& c : registry().tuples) out.push_back(c.name);
    for (const auto& c : registry().globals) out.push_back(c.name);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CheckSpec> select_checks(const std::vector<std::string>& patterns) {
    const auto names = registered_checks();
    std::vector<CheckSpec> out;
    if (patterns.empty()) {
        for (const auto& n : names) out.push_back({n});
        return out;
    }
    std::vector<std::string> chosen;
    for (const auto& p : patterns) {
        bool any = false;
        for (const auto& n : names)
            if (n == p || n.rfind(p + ".", 0) == 0) {
                chosen.push_back(n);
                any = true;
            }
        if (!any) throw InputError("unknown check or suite: " + p);
    }
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    for (const auto& n : chosen) out.push_back({n});
    return out;
}

VerificationReport run_suite(const Algebra& H, const std::vector<CheckSpec>& specs, const SuiteOptions& opts) {
    if (H.level() < 2) throw InputError("level must be at least 2");
    const auto& reg = registry();
    Ctx ctx(H);
    const unsigned have = available(H.tables());
    const int threads = opts.threads > 0 ? opts.threads : worker_threads();

    VerificationReport rep;
    rep.level = H.level();
    rep.dim = H.dim();
    rep.conventions = H.conventions();
    rep.seed = opts.seed;

    std::vector<std::function<CheckResult()>> globals_todo;
    for (const auto& spec : specs) {
        auto tc = std::find_if(reg.tuples.begin(), reg.tuples.end(), [&](const auto& c) { return c.name == spec.name; });
        auto gc = std::find_if(reg.globals.begin(), reg.globals.end(), [&](const auto& c) { return c.name == spec.name; });
        if (tc == reg.tuples.end() && gc == reg.globals.end()) throw InputError("unknown check: " + spec.name);
        const unsigned needs = tc != reg.tuples.end() ? tc->needs : gc->needs;
        if (needs & ~have) {
            CheckResult r;
            r.name = spec.name;
            r.status = CheckStatus::Skipped;
            r.reason = missing_reason(needs & ~have);
            rep.results.push_back(r);
            continue;
        }
        if (tc != reg.tuples.end()) {
            auto start = std::chrono::steady_clock::now();
            auto r = run_tuple_check(ctx, *tc, spec.force_sampled, opts, threads);
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            rep.results.push_back(std::move(r));
            continue;
        }
        const GlobalCheck* g = &*gc;
        if (g->max_level && H.level() > g->max_level) {
            CheckResult r;
            r.name = g->name;
            r.status = CheckStatus::Skipped;
            r.reason = "beyond exhaustive range (r <= " + std::to_string(g->max_level) + ")";
            rep.results.push_back(r);
            continue;
        }
        globals_todo.push_back([g, &ctx] {
            CheckResult r;
            r.name = g->name;
            auto start = std::chrono::steady_clock::now();
            auto out = g->fn(ctx);
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            r.scope = {Scope::Kind::Exhaustive, out.cases, 0};
            if (out.witness) {
                r.status = CheckStatus::Fail;
                r.witness = out.witness;
            }
            return r;
        });
    }

    // Global checks are independent; run them on the worker pool.
    std::vector<CheckResult> gres(globals_todo.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < globals_todo.size();) gres[i] = globals_todo[i]();
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < std::min<int>(threads, static_cast<int>(globals_todo.size())); ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (auto& r : gres) rep.results.push_back(std::move(r));

    std::sort(rep.results.begin(), rep.results.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return rep;
}

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const auto& r) { return r.status == CheckStatus::Fail; }));
}

std::string VerificationReport::to_json(bool include_timing) const {
    using nlohmann::ordered_json;
    ordered_json conv = {{"crossing", conventions.crossing_name()}, {"reading", conventions.reading_name()}};
    ordered_json checks = ordered_json::array();
    for (const auto& r : results) {
        ordered_json c;
        c["check"] = r.name;
        if (r.status == CheckStatus::Skipped) {
            c["scope"] = nullptr;
        } else if (r.scope.kind == Scope::Kind::Exhaustive) {
            c["scope"] = {{"kind", "exhaustive"}, {"cases", r.scope.count}};
        } else {
            c["scope"] = {{"kind", "sampled"}, {"count", r.scope.count}, {"seed", r.scope.seed}};
        }
        c["status"] = status_name(r.status);
        if (r.witness) c["witness"] = {{"tuple", r.witness->tuple}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
        if (!r.reason.empty()) c["reason"] = r.reason;
        c["conventions"] = conv;
        c["r"] = level;
        c["dim"] = dim;
        checks.push_back(std::move(c));
    }
    ordered_json doc;
    doc["r"] = level;
    doc["dim"] = dim;
    doc["conventions"] = conv;
    doc["seed"] = seed;
    doc["passed"] = passed();
    doc["checks"] = std::move(checks);
    if (include_timing) {
        ordered_json timing = ordered_json::object();
        for (const auto& r : results) timing[r.name] = r.seconds;
        doc["timing_seconds"] = std::move(timing);
    }
    return doc.dump(2) + "\n";
}

std::string VerificationReport::summary() const {
    std::ostringstream os;
    std::size_t pass = 0, skip = 0;
    for (const auto& r : results) {
        os << status_name(r.status) << "  " << r.name;
        if (r.status == CheckStatus::Skipped)
            os << "  (" << r.reason << ")";
        else
            os << "  " << r.scope.to_string();
        os << "\n";
        if (r.witness) os << "    at " << r.witness->tuple << "\n    lhs " << r.witness->lhs << "\n    rhs " << r.witness->rhs << "\n";
        pass += r.status == CheckStatus::Pass;
        skip += r.status == CheckStatus::Skipped;
    }
    os << "r=" << level << " dim=" << dim << " conventions=" << conventions.crossing_name() << "/" << conventions.reading_name() << ": "
       << pass << " passed, " << failures() << " failed, " << skip << " skipped\n";
    return os.str();
}

Conventions pin_conventions(int level) {
    const std::array<Conventions, 4> all{
        Conventions{Conventions::Crossing::Positive, Conventions::Reading::ClosingStrand},
        Conventions{Conventions::Crossing::Negative, Conventions::Reading::ClosingStrand},
        Conventions{Conventions::Crossing::Positive, Conventions::Reading::InnerStrand},
        Conventions{Conventions::Crossing::Negative, Conventions::Reading::InnerStrand},
    };
    auto specs = select_checks({"coquasi", "coribbon"});
    for (int r = level; r <= std::max(level, 4); ++r) {
        std::vector<Conventions> passing;
        for (const auto& conv : all) {
            Algebra H = build_algebra(r, conv);
            SuiteOptions opts;
            opts.threads = 1;
            if (run_suite(H, specs, opts).passed()) passing.push_back(conv);
        }
        if (passing.size() == 1) return passing.front();
        if (passing.empty()) break;
    }
    throw std::logic_error("conventions unresolvable");
}

}  // namespace wha
