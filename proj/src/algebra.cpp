#include "wha/algebra.hpp"
#include "wha/recoupling.hpp"

#include <sstream>
#include <stdexcept>

namespace wha {

std::string BasisLabel::to_string() const {
    std::ostringstream os;
    os << "[e^" << p << q << "|e_" << r << s << "]_" << j;
    return os.str();
}

std::string Conventions::crossing_name() const { return crossing == Crossing::Positive ? "positive" : "negative"; }
std::string Conventions::reading_name() const { return reading == Reading::ClosingStrand ? "closing-strand" : "inner-strand"; }

CycloScalar Element::coefficient(Index i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? CycloScalar() : it->second;
}

void Element::add(Index i, const CycloScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [i, c] : o.terms_) add(i, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [i, c] : o.terms_) add(i, -c);
    return *this;
}

Element& Element::operator*=(const CycloScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [i, v] : terms_) v *= c;
    return *this;
}

void accumulate(Tensor2& t, const std::array<Index, 2>& k, const CycloScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

void accumulate(Tensor3& t, const std::array<Index, 3>& k, const CycloScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

Algebra::Algebra(std::shared_ptr<const StructureTables> tables) : t_(std::move(tables)) {
    for (Index i = 0; i < t_->basis.size(); ++i) index_.emplace(t_->basis[i], i);
    if (t_->has_delta) unit_delta_ = comultiply(unit());
}

Index Algebra::index_of(const BasisLabel& b) const {
    auto it = index_.find(b);
    if (it == index_.end()) throw InputError("not a basis vector at this level: " + b.to_string());
    return it->second;
}

Element Algebra::basis_element(Index i) const {
    if (i >= dim()) throw InputError("basis index out of range");
    return Element(i, scalar(1));
}

Element Algebra::multiply(const Element& x, const Element& y) const {
    if (!t_->has_mu) throw InputError("multiplication table not available");
    Element out;
    const std::size_t n = dim();
    for (const auto& [i, a] : x.terms())
        for (const auto& [j, b] : y.terms()) {
            const auto& row = t_->mu[i * n + j];
            if (row.empty()) continue;
            CycloScalar ab = a * b;
            for (const auto& [k, c] : row) out.add(k, ab * c);
        }
    return out;
}

Element Algebra::unit() const {
    Element out;
    for (const auto& [k, c] : t_->unit) out.add(k, c);
    return out;
}

CycloScalar Algebra::counit(const Element& x) const {
    return linear(x, [&](Index i) { return t_->counit[i]; });
}

Tensor2 Algebra::comultiply_basis(Index i) const {
    if (!t_->has_delta) throw InputError("comultiplication table not available");
    Tensor2 out;
    for (const auto& [k, c] : t_->delta[i]) accumulate(out, k, c);
    return out;
}

Tensor2 Algebra::comultiply(const Element& x) const {
    if (!t_->has_delta) throw InputError("comultiplication table not available");
    Tensor2 out;
    for (const auto& [i, a] : x.terms())
        for (const auto& [k, c] : t_->delta[i]) accumulate(out, k, a * c);
    return out;
}

Element Algebra::antipode(const Element& x) const {
    if (!t_->has_antipode) throw InputError("antipode table not available");
    Element out;
    for (const auto& [i, a] : x.terms())
        for (const auto& [k, c] : t_->antipode[i]) out.add(k, a * c);
    return out;
}

const Tensor2& Algebra::unit_coproduct() const {
    if (!t_->has_delta) throw InputError("comultiplication table not available");
    return unit_delta_;
}

Element Algebra::counital_target(const Element& x) const {
    Element out;
    for (const auto& [k, c] : unit_coproduct()) {
        CycloScalar e = counit(multiply(basis_element(k[0]), x));
        if (!e.is_zero()) out.add(k[1], c * e);
    }
    return out;
}

Element Algebra::counital_source(const Element& x) const {
    Element out;
    for (const auto& [k, c] : unit_coproduct()) {
        CycloScalar e = counit(multiply(x, basis_element(k[1])));
        if (!e.is_zero()) out.add(k[0], c * e);
    }
    return out;
}

std::vector<Element> Algebra::image_basis(const std::vector<Element>& images) const {
    Matrix m(level(), static_cast<int>(dim()), static_cast<int>(images.size()));
    for (std::size_t c = 0; c < images.size(); ++c)
        for (const auto& [i, v] : images[c].terms()) m.at(static_cast<int>(i), static_cast<int>(c)) = v;
    auto img = column_space(m);
    std::vector<Element> out(img.basis.cols());
    for (int c = 0; c < img.basis.cols(); ++c)
        for (int i = 0; i < img.basis.rows(); ++i) out[c].add(static_cast<Index>(i), img.basis.at(i, c));
    return out;
}

std::vector<Element> Algebra::base_algebra_target() const {
    std::vector<Element> images;
    for (Index i = 0; i < dim(); ++i) images.push_back(counital_target(basis_element(i)));
    return image_basis(images);
}

std::vector<Element> Algebra::base_algebra_source() const {
    std::vector<Element> images;
    for (Index i = 0; i < dim(); ++i) images.push_back(counital_source(basis_element(i)));
    return image_basis(images);
}

int Algebra::intersection_dimension() const {
    auto ht = base_algebra_target();
    auto hs = base_algebra_source();
    auto both = ht;
    both.insert(both.end(), hs.begin(), hs.end());
    return static_cast<int>(ht.size() + hs.size() - image_basis(both).size());
}

std::vector<Index> Algebra::minimal_subalgebra() const {
    std::vector<Index> out;
    for (Index i = 0; i < dim(); ++i)
        if (t_->basis[i].j == 0) out.push_back(i);
    return out;
}

namespace {
void require_forms(const StructureTables& t) {
    if (!t.has_forms) throw InputError("linear forms not available");
}
}  // namespace

CycloScalar Algebra::r_form(const Element& x, const Element& y) const {
    require_forms(*t_);
    CycloScalar acc(level(), 0);
    for (const auto& [i, a] : x.terms())
        for (const auto& [j, b] : y.terms())
            if (!t_->r_form.at(i, j).is_zero()) acc += a * b * t_->r_form.at(i, j);
    return acc;
}

CycloScalar Algebra::r_bar(const Element& x, const Element& y) const {
    require_forms(*t_);
    CycloScalar acc(level(), 0);
    for (const auto& [i, a] : x.terms())
        for (const auto& [j, b] : y.terms())
            if (!t_->r_bar.at(i, j).is_zero()) acc += a * b * t_->r_bar.at(i, j);
    return acc;
}

CycloScalar Algebra::q_form(const Element& x, const Element& y) const {
    require_forms(*t_);
    CycloScalar acc(level(), 0);
    for (const auto& [i, a] : x.terms())
        for (const auto& [j, b] : y.terms())
            if (!t_->q_form.at(i, j).is_zero()) acc += a * b * t_->q_form.at(i, j);
    return acc;
}

CycloScalar Algebra::ribbon_form(const Element& x) const {
    require_forms(*t_);
    return linear(x, [&](Index i) { return t_->nu[i]; });
}

CycloScalar Algebra::ribbon_bar(const Element& x) const {
    require_forms(*t_);
    return linear(x, [&](Index i) { return t_->nu_bar[i]; });
}

CycloScalar Algebra::drinfeld_u(const Element& x) const {
    require_forms(*t_);
    return linear(x, [&](Index i) { return t_->u[i]; });
}

CycloScalar Algebra::drinfeld_v(const Element& x) const {
    require_forms(*t_);
    return linear(x, [&](Index i) { return t_->v[i]; });
}

CycloScalar Algebra::pivotal_form(const Element& x) const {
    require_forms(*t_);
    return linear(x, [&](Index i) { return t_->w[i]; });
}

CycloScalar Algebra::pivotal_bar(const Element& x) const { return pivotal_form(antipode(x)); }

namespace {

std::vector<std::pair<int, int>> channels(int level, int j) {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p <= level - 2; ++p)
        for (int q = 0; q <= level - 2; ++q)
            if (admissible(level, p, q, j)) out.emplace_back(p, q);
    return out;
}

}  // namespace

Element Algebra::dual_character(int j) const {
    Element out;
    for (auto [t, u] : channels(level(), j)) out.add(index_of({j, u, t, t, u}), scalar(1));
    return out;
}

// T_V = sum_{a,b} c_{ab} w(c_{ba}) with c_{(tu),(pq)} = [e^{ut}|e_{pq}]_j.
Element Algebra::dual_quantum_character(int j) const {
    Element out;
    auto ch = channels(level(), j);
    for (auto [t, u] : ch)
        for (auto [p, q] : ch) {
            CycloScalar wv = pivotal_form(element({j, q, p, t, u}));
            if (!wv.is_zero()) out.add(index_of({j, u, t, p, q}), wv);
        }
    return out;
}

Matrix Algebra::qtilde_matrix() const {
    auto m = try_qtilde_matrix();
    if (!m) throw std::logic_error("q~ identity is not a multiple of the unit");
    return *m;
}

std::optional<Matrix> Algebra::try_qtilde_matrix() const {
    const int n = label_count();
    Matrix out(level(), n, n);
    // eps_s o S on basis vectors, cached for the double loop
    std::vector<Element> es_s(dim());
    std::vector<char> have(dim(), 0);
    auto es_s_of = [&](Index k) -> const Element& {
        if (!have[k]) {
            es_s[k] = counital_source(antipode(basis_element(k)));
            have[k] = 1;
        }
        return es_s[k];
    };
    const Element one = unit();
    const auto& [k0, c0] = *one.terms().begin();
    for (int a = 0; a < n; ++a) {
        Tensor2 da = comultiply(dual_quantum_character(a));
        for (int b = 0; b < n; ++b) {
            Tensor2 db = comultiply(dual_quantum_character(b));
            Element acc;
            for (const auto& [ka, ca] : da)
                for (const auto& [kb, cb] : db) {
                    const auto& qv = t_->q_form.at(ka[0], kb[0]);
                    if (qv.is_zero()) continue;
                    Element prod = multiply(basis_element(ka[1]), basis_element(kb[1]));
                    for (const auto& [k, c] : prod.terms()) acc += (ca * cb * qv * c) * es_s_of(k);
                }
            CycloScalar value = acc.coefficient(k0) / c0;
            if (!(acc == value * one)) return std::nullopt;
            out.at(a, b) = value;
        }
    }
    return out;
}

Matrix Algebra::qtilde_matrix_via_counit() const {
    const int n = label_count();
    Matrix out(level(), n, n);
    const CycloScalar units = counit(unit());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out.at(a, b) = q_form(dual_quantum_character(a), dual_quantum_character(b)) / units;
    return out;
}

bool Algebra::is_weakly_cofactorizable() const { return !determinant(t_->smatrix).is_zero(); }

std::optional<std::vector<CycloScalar>> Algebra::coordinates(const Element& x, const std::vector<Element>& span) const {
    const int k = static_cast<int>(span.size());
    Matrix m(level(), static_cast<int>(dim()), k + 1);
    for (int c = 0; c < k; ++c)
        for (const auto& [i, v] : span[c].terms()) m.at(static_cast<int>(i), c) = v;
    for (const auto& [i, v] : x.terms()) m.at(static_cast<int>(i), k) = v;
    std::vector<int> piv;
    Matrix red = row_reduce(m, &piv);
    if (!piv.empty() && piv.back() == k) return std::nullopt;
    std::vector<CycloScalar> out(k);
    for (std::size_t row = 0; row < piv.size(); ++row) out[piv[row]] = red.at(static_cast<int>(row), k);
    return out;
}

}  // namespace wha
