#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wha/cyclo.hpp"

namespace wha::tl {

// Non-crossing matching on top+bottom boundary points.  Points are numbered
// clockwise: top 0..n-1 left to right, then bottom right to left, so bottom
// position k (from the left) is point n + m - 1 - k.
struct PlanarDiagram {
    int top = 0;
    int bottom = 0;
    std::vector<std::uint8_t> pairing;

    int top_partner_linear(int i) const;  // linear index of the partner of top i
    bool operator<(const PlanarDiagram& o) const { return pairing < o.pairing; }
    bool operator==(const PlanarDiagram& o) const = default;
    std::string to_string() const;
    bool is_planar() const;
};

// Diagram plus the closed loops produced while normalizing it.
struct Normalized {
    PlanarDiagram diagram;
    int loops = 0;
};

Normalized compose_diagrams(const PlanarDiagram& upper, const PlanarDiagram& lower);

class SkeinElement {
public:
    SkeinElement(int level, int top, int bottom) : level_(level), top_(top), bottom_(bottom) {}

    int level() const { return level_; }
    int top() const { return top_; }
    int bottom() const { return bottom_; }
    const std::map<PlanarDiagram, CycloScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PlanarDiagram& d, const CycloScalar& c);
    SkeinElement& operator+=(const SkeinElement& o);
    SkeinElement& operator-=(const SkeinElement& o);
    SkeinElement& operator*=(const CycloScalar& c);
    friend SkeinElement operator+(SkeinElement a, const SkeinElement& b) { return a += b; }
    friend SkeinElement operator-(SkeinElement a, const SkeinElement& b) { return a -= b; }
    friend SkeinElement operator*(const CycloScalar& c, SkeinElement a) { return a *= c; }
    bool operator==(const SkeinElement& o) const;
    std::string to_string() const;

private:
    int level_;
    int top_;
    int bottom_;
    std::map<PlanarDiagram, CycloScalar> terms_;
};

CycloScalar loop_value(int level);

SkeinElement identity(int level, int n);
// Cup-cap generator joining strands i-1 and i (1 <= i < n).
SkeinElement cup_cap(int level, int n, int i);
// Kauffman bracket resolution: sign +1 gives A*id + A^{-1}*e_i, -1 the mirror.
SkeinElement crossing(int level, int n, int i, int sign = +1);
// 0 -> 2k nested arcs, and its mirror 2k -> 0.
SkeinElement cup(int level, int k);
SkeinElement cap(int level, int k);

// Vertical stacking: upper on top, lower below (the morphism lower o upper).
SkeinElement compose(const SkeinElement& upper, const SkeinElement& lower);
SkeinElement tensor(const SkeinElement& left, const SkeinElement& right);
CycloScalar closure(const SkeinElement& x);
// Closes the rightmost k strands around the right side.
SkeinElement partial_trace(const SkeinElement& x, int k);

// Memoized per (level, n); requires n <= level - 1.
const SkeinElement& jones_wenzl(int level, int n);

// Bundle of a strands crossing over to the right past b strands: a+b -> b+a.
SkeinElement bundle_crossing(int level, int a, int b, int sign = +1);
// Trivalent vertices on JW-projected bundles.  merge: a (x) b -> c, split: c -> a (x) b.
SkeinElement merge_vertex(int level, int a, int b, int c);
SkeinElement split_vertex(int level, int c, int a, int b);

}  // namespace wha::tl
