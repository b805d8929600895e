#pragma once

#include <vector>

#include "wha/algebra.hpp"
#include "wha/linalg.hpp"

namespace wha {

// Finite-dimensional right comodule: beta(v_a) = sum_b v_b (x) c_{ba}.
class Comodule {
public:
    Comodule() = default;
    Comodule(int dim, std::vector<Element> coefficients);

    int dim() const { return dim_; }
    const Element& c(int row, int col) const { return coeff_[static_cast<std::size_t>(row) * dim_ + col]; }
    const std::vector<Element>& coefficients() const { return coeff_; }

private:
    int dim_ = 0;
    std::vector<Element> coeff_;
};

// omega(V_j), basis e_{pq} for admissible (p, q, j) in lexicographic order.
Comodule irreducible_comodule(const Algebra& H, int j);
// H_s with beta = Delta, in the column-reduced basis of the source base algebra.
Comodule unit_comodule(const Algebra& H);
Comodule dual_comodule(const Algebra& H, const Comodule& V);

bool satisfies_counit_law(const Algebra& H, const Comodule& V);
bool satisfies_coassociativity(const Algebra& H, const Comodule& V);

// P[(a',b'),(a,b)] = eps(c^V_{a'a} c^W_{b'b}) on the plain tensor product.
Matrix truncation_idempotent(const Algebra& H, const Comodule& V, const Comodule& W);

struct TruncatedTensor {
    int left_dim = 0, right_dim = 0;
    Matrix projector;
    ImageBasis image;
    Comodule product;
};
TruncatedTensor truncated_tensor(const Algebra& H, const Comodule& V, const Comodule& W);
// The image of P is a subcomodule and the induced coaction is the restriction.
bool truncated_coaction_consistent(const Algebra& H, const Comodule& V, const Comodule& W, const TruncatedTensor& T);

// sigma_{V,W}: V (x)^ W -> W (x)^ V in the image bases, built from r.
Matrix braiding_map(const Algebra& H, const Comodule& V, const Comodule& W);
// W (x)^ V -> V (x)^ W built from r-bar.
Matrix braiding_inverse(const Algebra& H, const Comodule& V, const Comodule& W);
// nu_V(v) = v_V nu(v_H)
Matrix ribbon_map(const Algebra& H, const Comodule& V);

// Scalar c with tr_V(f)(eta(1)) = c eta(1).
CycloScalar comodule_trace(const Algebra& H, const Matrix& f, const Comodule& V);
// Same scalar for f = id from the dual quantum character: eps(T') eps_s(S(T'')) = c eta(1).
CycloScalar trace_of_identity_via_character(const Algebra& H, const Comodule& V);
Element character(const Comodule& V);

// rho o (id (x) ev) o alpha o (coev (x) id) o lambda^{-1} = id_V, and the mirror on V*.
bool left_triangle_holds(const Algebra& H, const Comodule& V);
bool right_triangle_holds(const Algebra& H, const Comodule& V);

}  // namespace wha
