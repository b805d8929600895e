#include "wha/tl.hpp"

#include <mutex>
#include <sstream>

namespace wha::tl {

namespace {

// Linear numbering: top i -> i, bottom k (from the left) -> n + k.
std::vector<int> to_linear(const PlanarDiagram& d) {
    const int n = d.top, total = d.top + d.bottom;
    auto lin = [&](int cw) { return cw < n ? cw : n + (total - 1 - cw); };
    std::vector<int> out(total);
    for (int p = 0; p < total; ++p) out[lin(p)] = lin(d.pairing[p]);
    return out;
}

PlanarDiagram from_linear(int n, int m, const std::vector<int>& lin) {
    const int total = n + m;
    auto cw = [&](int l) { return l < n ? l : n + (total - 1 - l); };
    PlanarDiagram d{n, m, std::vector<std::uint8_t>(total)};
    for (int l = 0; l < total; ++l) d.pairing[cw(l)] = static_cast<std::uint8_t>(cw(lin[l]));
    return d;
}

void require_level(const SkeinElement& a, const SkeinElement& b) {
    if (a.level() != b.level()) throw InputError("skein level mismatch");
}

}  // namespace

int PlanarDiagram::top_partner_linear(int i) const { return to_linear(*this)[i]; }

bool PlanarDiagram::is_planar() const {
    const int total = top + bottom;
    if (static_cast<int>(pairing.size()) != total) return false;
    for (int i = 0; i < total; ++i) {
        int j = pairing[i];
        if (j == i || pairing[j] != i) return false;
        int lo = std::min(i, j), hi = std::max(i, j);
        for (int k = lo + 1; k < hi; ++k)
            if (pairing[k] < lo || pairing[k] > hi) return false;
    }
    return true;
}

std::string PlanarDiagram::to_string() const {
    // bracket sequence around the boundary
    std::string s;
    for (int i = 0; i < top + bottom; ++i) s += pairing[i] > i ? '(' : ')';
    std::ostringstream os;
    os << top << ":" << bottom << ":" << s;
    return os.str();
}

std::string SkeinElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [d, c] : terms_) out += (out.empty() ? "(" : " + (") + c.to_string() + ")" + d.to_string();
    return out;
}

Normalized compose_diagrams(const PlanarDiagram& upper, const PlanarDiagram& lower) {
    if (upper.bottom != lower.top) throw InputError("compose: arity mismatch");
    const int n = upper.top, k = upper.bottom, m = lower.bottom;
    const auto U = to_linear(upper);
    const auto L = to_linear(lower);
    std::vector<int> R(n + m, -1);
    std::vector<char> seen(k, 0);

    // Walk from an outer endpoint until another outer endpoint is reached.
    // Result numbering: top i -> i, bottom l -> n + l.
    auto walk_from_upper = [&](int pos) {
        int p = U[pos];
        while (true) {
            if (p < n) return p;
            int mid = p - n;
            seen[mid] = 1;
            int q = L[mid];
            if (q >= k) return n + (q - k);
            seen[q] = 1;
            p = U[n + q];
        }
    };
    auto walk_from_lower = [&](int pos) {
        int q = L[pos];
        while (true) {
            if (q >= k) return n + (q - k);
            seen[q] = 1;
            int p = U[n + q];
            if (p < n) return p;
            int mid = p - n;
            seen[mid] = 1;
            q = L[mid];
        }
    };
    for (int i = 0; i < n; ++i)
        if (R[i] < 0) {
            int e = walk_from_upper(i);
            R[i] = e;
            R[e] = i;
        }
    for (int l = 0; l < m; ++l)
        if (R[n + l] < 0) {
            int e = walk_from_lower(k + l);
            R[n + l] = e;
            R[e] = n + l;
        }
    int loops = 0;
    for (int j = 0; j < k; ++j) {
        if (seen[j]) continue;
        ++loops;
        int cur = j;
        do {
            seen[cur] = 1;
            int j2 = L[cur];
            seen[j2] = 1;
            cur = U[n + j2] - n;
        } while (cur != j);
    }
    return {from_linear(n, m, R), loops};
}

void SkeinElement::add_term(const PlanarDiagram& d, const CycloScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SkeinElement& SkeinElement::operator+=(const SkeinElement& o) {
    require_level(*this, o);
    if (top_ != o.top_ || bottom_ != o.bottom_) throw InputError("skein arity mismatch");
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

SkeinElement& SkeinElement::operator-=(const SkeinElement& o) {
    require_level(*this, o);
    if (top_ != o.top_ || bottom_ != o.bottom_) throw InputError("skein arity mismatch");
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

SkeinElement& SkeinElement::operator*=(const CycloScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, v] : terms_) v *= c;
    return *this;
}

bool SkeinElement::operator==(const SkeinElement& o) const {
    return level_ == o.level_ && top_ == o.top_ && bottom_ == o.bottom_ && terms_ == o.terms_;
}

CycloScalar loop_value(int level) { return -(a_power(level, 2) + a_power(level, -2)); }

SkeinElement identity(int level, int n) {
    std::vector<int> lin(2 * n);
    for (int i = 0; i < n; ++i) {
        lin[i] = n + i;
        lin[n + i] = i;
    }
    SkeinElement out(level, n, n);
    out.add_term(from_linear(n, n, lin), CycloScalar(level, 1));
    return out;
}

SkeinElement cup_cap(int level, int n, int i) {
    if (i < 1 || i >= n) throw InputError("cup_cap: position out of range");
    std::vector<int> lin(2 * n);
    for (int s = 0; s < n; ++s) {
        lin[s] = n + s;
        lin[n + s] = s;
    }
    lin[i - 1] = i;
    lin[i] = i - 1;
    lin[n + i - 1] = n + i;
    lin[n + i] = n + i - 1;
    SkeinElement out(level, n, n);
    out.add_term(from_linear(n, n, lin), CycloScalar(level, 1));
    return out;
}

SkeinElement crossing(int level, int n, int i, int sign) {
    SkeinElement out = a_power(level, sign) * identity(level, n);
    out += a_power(level, -sign) * cup_cap(level, n, i);
    return out;
}

SkeinElement cup(int level, int k) {
    std::vector<int> lin(2 * k);
    for (int i = 0; i < 2 * k; ++i) lin[i] = 2 * k - 1 - i;
    SkeinElement out(level, 0, 2 * k);
    out.add_term(from_linear(0, 2 * k, lin), CycloScalar(level, 1));
    return out;
}

SkeinElement cap(int level, int k) {
    std::vector<int> lin(2 * k);
    for (int i = 0; i < 2 * k; ++i) lin[i] = 2 * k - 1 - i;
    SkeinElement out(level, 2 * k, 0);
    out.add_term(from_linear(2 * k, 0, lin), CycloScalar(level, 1));
    return out;
}

SkeinElement compose(const SkeinElement& upper, const SkeinElement& lower) {
    require_level(upper, lower);
    if (upper.bottom() != lower.top()) throw InputError("compose: arity mismatch");
    SkeinElement out(upper.level(), upper.top(), lower.bottom());
    const CycloScalar delta = loop_value(upper.level());
    std::vector<CycloScalar> delta_pow{CycloScalar(upper.level(), 1)};
    for (const auto& [du, cu] : upper.terms())
        for (const auto& [dl, cl] : lower.terms()) {
            auto nd = compose_diagrams(du, dl);
            while (static_cast<int>(delta_pow.size()) <= nd.loops) delta_pow.push_back(delta_pow.back() * delta);
            out.add_term(nd.diagram, cu * cl * delta_pow[nd.loops]);
        }
    return out;
}

SkeinElement tensor(const SkeinElement& left, const SkeinElement& right) {
    require_level(left, right);
    const int n1 = left.top(), m1 = left.bottom(), n2 = right.top(), m2 = right.bottom();
    const int n = n1 + n2, m = m1 + m2;
    SkeinElement out(left.level(), n, m);
    auto map_left = [&](int l) { return l < n1 ? l : n + (l - n1); };
    auto map_right = [&](int l) { return l < n2 ? n1 + l : n + m1 + (l - n2); };
    for (const auto& [dl, cl] : left.terms()) {
        auto L = to_linear(dl);
        for (const auto& [dr, cr] : right.terms()) {
            auto Rr = to_linear(dr);
            std::vector<int> lin(n + m);
            for (int p = 0; p < n1 + m1; ++p) lin[map_left(p)] = map_left(L[p]);
            for (int p = 0; p < n2 + m2; ++p) lin[map_right(p)] = map_right(Rr[p]);
            out.add_term(from_linear(n, m, lin), cl * cr);
        }
    }
    return out;
}

CycloScalar closure(const SkeinElement& x) {
    if (x.top() != x.bottom()) throw InputError("closure: top and bottom arity differ");
    const int n = x.top();
    const CycloScalar delta = loop_value(x.level());
    CycloScalar acc(x.level(), 0);
    for (const auto& [d, c] : x.terms()) {
        auto lin = to_linear(d);
        std::vector<char> seen(2 * n, 0);
        int loops = 0;
        for (int s = 0; s < 2 * n; ++s) {
            if (seen[s]) continue;
            ++loops;
            int p = s;
            do {
                seen[p] = 1;
                int q = lin[p];
                seen[q] = 1;
                p = q < n ? q + n : q - n;  // closing arc around the side
            } while (p != s);
        }
        acc += c * delta.pow(loops);
    }
    return acc;
}

SkeinElement partial_trace(const SkeinElement& x, int k) {
    if (x.top() != x.bottom() || k > x.top()) throw InputError("partial_trace: bad arity");
    const int level = x.level(), rest = x.top() - k;
    auto opened = tensor(identity(level, rest), cup(level, k));
    auto middle = tensor(x, identity(level, k));
    auto closed = tensor(identity(level, rest), cap(level, k));
    return compose(compose(opened, middle), closed);
}

const SkeinElement& jones_wenzl(int level, int n) {
    if (n < 0) throw InputError("jones_wenzl: negative strand count");
    if (n > level - 1) throw InputError("jones_wenzl: quantum integer vanishes for n >= r");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<SkeinElement>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({level, n}); it != cache.end()) return *it->second;
    }
    SkeinElement value = identity(level, n);
    if (n >= 2) {
        // p_n = p' - (Delta_{n-2}/Delta_{n-1}) p' e_{n-1} p',  p' = p_{n-1} (x) 1
        auto ext = tensor(jones_wenzl(level, n - 1), identity(level, 1));
        auto dim = [level](int j) { return (j % 2 ? CycloScalar(level, -1) : CycloScalar(level, 1)) * quantum_int(level, j + 1); };
        auto sandwich = compose(compose(ext, cup_cap(level, n, n - 1)), ext);
        value = ext - (dim(n - 2) / dim(n - 1)) * sandwich;
    }
    std::lock_guard lock(mu);
    auto& slot = cache[{level, n}];
    if (!slot) slot = std::make_unique<SkeinElement>(std::move(value));
    return *slot;
}

SkeinElement bundle_crossing(int level, int a, int b, int sign) {
    const int n = a + b;
    SkeinElement acc = identity(level, n);
    // move the left bundle's strands to the right, rightmost strand first
    for (int s = a - 1; s >= 0; --s)
        for (int pos = s; pos < s + b; ++pos) acc = compose(acc, crossing(level, n, pos + 1, sign));
    return acc;
}

namespace {

// a+b strands -> c strands: identity on outer strands, k nested caps in the middle.
SkeinElement inner_caps(int level, int a, int b, int k) {
    return tensor(tensor(identity(level, a - k), cap(level, k)), identity(level, b - k));
}

SkeinElement inner_cups(int level, int a, int b, int k) {
    return tensor(tensor(identity(level, a - k), cup(level, k)), identity(level, b - k));
}

int internal_arcs(int a, int b, int c) {
    if ((a + b + c) % 2 || a + b < c || b + c < a || c + a < b)
        throw InputError("trivalent vertex labels violate parity or triangle inequality");
    return (a + b - c) / 2;
}

}  // namespace

SkeinElement merge_vertex(int level, int a, int b, int c) {
    int k = internal_arcs(a, b, c);
    auto top = tensor(jones_wenzl(level, a), jones_wenzl(level, b));
    return compose(compose(top, inner_caps(level, a, b, k)), jones_wenzl(level, c));
}

SkeinElement split_vertex(int level, int c, int a, int b) {
    int k = internal_arcs(a, b, c);
    auto bottom = tensor(jones_wenzl(level, a), jones_wenzl(level, b));
    return compose(compose(jones_wenzl(level, c), inner_cups(level, a, b, k)), bottom);
}

}  // namespace wha::tl
