#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wha/cyclo.hpp"
#include "wha/linalg.hpp"

namespace wha {

// [e^{pq} | e_{rs}]_j : the dual side maps V_p (x) V_j -> V_q, the primal side
// V_r -> V_s (x) V_j.
struct BasisLabel {
    int j = 0, p = 0, q = 0, r = 0, s = 0;
    auto operator<=>(const BasisLabel&) const = default;
    std::string to_string() const;
};

using Index = std::uint32_t;

// Sparse linear combination of basis vectors.
class Element {
public:
    Element() = default;
    Element(Index i, const CycloScalar& c) { add(i, c); }

    const std::map<Index, CycloScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    CycloScalar coefficient(Index i) const;
    void add(Index i, const CycloScalar& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const CycloScalar& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const CycloScalar& c, Element a) { return a *= c; }
    bool operator==(const Element& o) const { return terms_ == o.terms_; }

private:
    std::map<Index, CycloScalar> terms_;
};

// Elements of H (x) H and H (x) H (x) H.
using Tensor2 = std::map<std::array<Index, 2>, CycloScalar>;
using Tensor3 = std::map<std::array<Index, 3>, CycloScalar>;
void accumulate(Tensor2& t, const std::array<Index, 2>& k, const CycloScalar& c);
void accumulate(Tensor3& t, const std::array<Index, 3>& k, const CycloScalar& c);

using SparseRow = std::vector<std::pair<Index, CycloScalar>>;

// Which crossing realizes the braiding, and where the dimension
// normalization of the r-form diagram sits.
struct Conventions {
    enum class Crossing { Positive, Negative };
    enum class Reading { ClosingStrand, InnerStrand };
    Crossing crossing = Crossing::Positive;
    Reading reading = Reading::ClosingStrand;
    bool operator==(const Conventions&) const = default;
    std::string crossing_name() const;
    std::string reading_name() const;
};

// Square matrix of a bilinear form on basis pairs, stored densely.
struct BilinearForm {
    std::size_t dim = 0;
    std::vector<CycloScalar> values;
    const CycloScalar& at(Index i, Index j) const { return values[i * dim + j]; }
    CycloScalar& at(Index i, Index j) { return values[i * dim + j]; }
};

// Complete structure constants of the algebra in the basis.  Everything
// downstream (operations, verification, export) works from these tables,
// so tables loaded from a file behave exactly like freshly built ones.
struct StructureTables {
    int level = 0;
    std::vector<BasisLabel> basis;
    Conventions conventions;
    std::vector<SparseRow> mu;                 // dim*dim rows, product of basis i and j
    std::vector<std::vector<std::pair<std::array<Index, 2>, CycloScalar>>> delta;
    std::vector<SparseRow> antipode;
    SparseRow unit;
    std::vector<CycloScalar> counit;
    BilinearForm r_form, r_bar, q_form;
    std::vector<CycloScalar> nu, nu_bar, u, v, w;
    Matrix smatrix;
    bool has_mu = false, has_delta = false, has_antipode = false, has_forms = false;
};

class Algebra {
public:
    explicit Algebra(std::shared_ptr<const StructureTables> tables);

    int level() const { return t_->level; }
    std::size_t dim() const { return t_->basis.size(); }
    const std::vector<BasisLabel>& basis() const { return t_->basis; }
    const StructureTables& tables() const { return *t_; }
    const Conventions& conventions() const { return t_->conventions; }
    Index index_of(const BasisLabel& b) const;
    bool contains(const BasisLabel& b) const { return index_.count(b) > 0; }
    Element basis_element(Index i) const;
    Element element(const BasisLabel& b) const { return basis_element(index_of(b)); }
    int label_count() const { return level() - 1; }
    CycloScalar scalar(long v) const { return CycloScalar(level(), v); }

    Element multiply(const Element& x, const Element& y) const;
    Element unit() const;
    CycloScalar counit(const Element& x) const;
    Tensor2 comultiply(const Element& x) const;
    Tensor2 comultiply_basis(Index i) const;
    Element antipode(const Element& x) const;

    Element counital_target(const Element& x) const;
    Element counital_source(const Element& x) const;
    // Bases of the images of the counital maps (column-reduced, deterministic).
    std::vector<Element> base_algebra_target() const;
    std::vector<Element> base_algebra_source() const;
    int intersection_dimension() const;
    // Indices of the j = 0 block.
    std::vector<Index> minimal_subalgebra() const;

    CycloScalar r_form(const Element& x, const Element& y) const;
    CycloScalar r_bar(const Element& x, const Element& y) const;
    CycloScalar q_form(const Element& x, const Element& y) const;
    CycloScalar ribbon_form(const Element& x) const;
    CycloScalar ribbon_bar(const Element& x) const;
    CycloScalar drinfeld_u(const Element& x) const;
    CycloScalar drinfeld_v(const Element& x) const;
    CycloScalar pivotal_form(const Element& x) const;
    // Convolution inverse of the pivotal form (w o S, w being dual group-like).
    CycloScalar pivotal_bar(const Element& x) const;

    Element dual_character(int j) const;
    Element dual_quantum_character(int j) const;
    // q~ from the defining identity q(T'(x)T')eps_s(S(T''T'')) = q~ eta(1).
    Matrix qtilde_matrix() const;
    // Empty when some entry of the identity is not a multiple of eta(1).
    std::optional<Matrix> try_qtilde_matrix() const;
    // Shortcut q(T_V (x) T_W)/|I|; must agree with qtilde_matrix.
    Matrix qtilde_matrix_via_counit() const;
    bool is_weakly_cofactorizable() const;

    // Expansion of x in the linear span of `span`, if x lies in it.
    std::optional<std::vector<CycloScalar>> coordinates(const Element& x, const std::vector<Element>& span) const;

    // Linear forms and elements evaluated on a vector given as a coefficient map.
    template <class F>
    CycloScalar linear(const Element& x, F&& on_basis) const {
        CycloScalar acc(level(), 0);
        for (const auto& [i, c] : x.terms()) acc += c * on_basis(i);
        return acc;
    }

private:
    const Tensor2& unit_coproduct() const;
    std::vector<Element> image_basis(const std::vector<Element>& images) const;

    std::shared_ptr<const StructureTables> t_;
    std::map<BasisLabel, Index> index_;
    Tensor2 unit_delta_;
};

std::vector<BasisLabel> enumerate_basis(int level);

struct TableSelection {
    bool mu = true, delta = true, antipode = true, forms = true;
};

// Structure constants from the recoupling formulas of the quantum sl2 category.
StructureTables build_tables(int level, const Conventions& conventions, const TableSelection& sel = {});
// Fills q, u, v, w and the S-matrix from mu/delta/antipode/r/nu.
void complete_derived_forms(StructureTables& t);
Algebra build_algebra(int level, const Conventions& conventions);

// Single basis-pair evaluations of the closed formulas (used by the table
// builder and by the oracle comparisons).
namespace formula {
SparseRow multiply(int level, const BasisLabel& x, const BasisLabel& y, const std::map<BasisLabel, Index>& index);
CycloScalar r_form(int level, const BasisLabel& x, const BasisLabel& y, const Conventions& conv);
CycloScalar r_bar(int level, const BasisLabel& x, const BasisLabel& y, const Conventions& conv);
CycloScalar antipode_coefficient(int level, const BasisLabel& x);
}  // namespace formula

// The same quantities evaluated by composing Temperley-Lieb morphisms.
namespace oracle {
// Coefficient of `target` in the product x*y.
CycloScalar multiply_coefficient(int level, const BasisLabel& x, const BasisLabel& y, const BasisLabel& target);
CycloScalar r_form(int level, const BasisLabel& x, const BasisLabel& y, const Conventions& conv);
CycloScalar r_bar(int level, const BasisLabel& x, const BasisLabel& y, const Conventions& conv);
CycloScalar ribbon_form(int level, const BasisLabel& x);
}  // namespace oracle

}  // namespace wha
