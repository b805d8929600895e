#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "wha/cyclo.hpp"
#include "wha/tl.hpp"

namespace wha {

// Labels live in I = {0, ..., r-2}.
bool admissible(int level, int a, int b, int c);
int label_count(int level);

// Memoized recoupling data for one level.  Closed forms are used for all
// values; the tl-based oracle below exists to validate them.
class RecouplingTables {
public:
    static const RecouplingTables& get(int level);
    explicit RecouplingTables(int level) : level_(level) {}

    int level() const { return level_; }
    CycloScalar dim(int j) const;
    CycloScalar theta(int a, int b, int c) const;
    // Tetrahedral net with vertex triples (a,b,j), (c,d,j), (a,d,i), (b,c,i).
    CycloScalar tet(int a, int b, int c, int d, int i, int j) const;
    // {a b i; c d j} = Delta_i Tet / (theta(a,d,i) theta(b,c,i))
    CycloScalar sixj(int a, int b, int i, int c, int d, int j) const;
    // Eigenvalue of the positive crossing of bundles a, b on the c channel.
    CycloScalar crossing_coeff(int a, int b, int c) const;
    CycloScalar twist(int j) const;
    // Categorical S-matrix entry, evaluated as a tl Hopf link.
    CycloScalar hopf_link(int i, int j) const;
    // Same quantity from the twist formula; used as a cross-check.
    CycloScalar hopf_link_formula(int i, int j) const;

    // Admissibility checks that throw InputError.
    void require_label(int j) const;
    void require_admissible(int a, int b, int c) const;

private:
    using Key = std::array<int, 7>;
    template <class F>
    CycloScalar memo(const Key& key, F&& compute) const;

    int level_;
    mutable std::mutex mu_;
    mutable std::map<Key, CycloScalar> cache_;
};

// Brute-force evaluations through the Temperley-Lieb engine.
namespace oracle {

CycloScalar dim(int level, int j);
CycloScalar theta(int level, int a, int b, int c);
CycloScalar tet(int level, int a, int b, int c, int d, int i, int j);
// lambda with (crossing of split vertex) = lambda * (split vertex with legs swapped), if any.
std::optional<CycloScalar> crossing_eigenvalue(int level, int a, int b, int c, int sign = +1);
// Scalar t with the closed kink on a JW bundle equal to t times the bundle.
std::optional<CycloScalar> twist(int level, int j, int sign = +1);
CycloScalar hopf_link(int level, int i, int j);
// H-shaped net with legs b, c on top and a, d below, internal edge j.
tl::SkeinElement h_net(int level, int a, int b, int c, int d, int j);
// Vertical I-shaped net b (x) c -> i -> a (x) d.
tl::SkeinElement i_net(int level, int a, int b, int c, int d, int i);
// Checks h_net(j) = sum_i {a b i; c d j} i_net(i): exactly when no fusion
// channel is cut off by the level bound, otherwise after closing against
// every admissible dual vertex pair.
bool recoupling_identity_holds(int level, int a, int b, int c, int d, int j);

}  // namespace oracle

}  // namespace wha
