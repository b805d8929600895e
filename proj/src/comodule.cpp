#include "wha/comodule.hpp"

#include <stdexcept>

#include "wha/recoupling.hpp"

namespace wha {

Comodule::Comodule(int dim, std::vector<Element> coefficients) : dim_(dim), coeff_(std::move(coefficients)) {
    if (coeff_.size() != static_cast<std::size_t>(dim) * dim) throw InputError("comodule coefficient count mismatch");
}

Comodule irreducible_comodule(const Algebra& H, int j) {
    const int level = H.level();
    RecouplingTables::get(level).require_label(j);
    std::vector<std::pair<int, int>> ch;
    for (int p = 0; p <= level - 2; ++p)
        for (int q = 0; q <= level - 2; ++q)
            if (admissible(level, p, q, j)) ch.emplace_back(p, q);
    const int n = static_cast<int>(ch.size());
    std::vector<Element> coeff(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto [t, u] = ch[a];
            auto [p, q] = ch[b];
            coeff[a * n + b] = H.element({j, u, t, p, q});
        }
    return Comodule(n, std::move(coeff));
}

Comodule unit_comodule(const Algebra& H) {
    auto hs = H.base_algebra_source();
    const int n = static_cast<int>(hs.size());
    std::vector<Element> coeff(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        // group Delta(h_i) by its right leg and expand each left part in the h basis
        std::map<Index, Element> by_right;
        for (const auto& [k, c] : H.comultiply(hs[i])) by_right[k[1]].add(k[0], c);
        for (const auto& [right, left] : by_right) {
            auto coords = H.coordinates(left, hs);
            if (!coords) throw std::logic_error("Delta(H_s) does not lie in H_s (x) H");
            for (int k = 0; k < n; ++k)
                if (!(*coords)[k].is_zero()) coeff[k * n + i].add(right, (*coords)[k]);
        }
    }
    return Comodule(n, std::move(coeff));
}

Comodule dual_comodule(const Algebra& H, const Comodule& V) {
    const int n = V.dim();
    std::vector<Element> coeff(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) coeff[b * n + a] = H.antipode(V.c(a, b));
    return Comodule(n, std::move(coeff));
}

bool satisfies_counit_law(const Algebra& H, const Comodule& V) {
    for (int a = 0; a < V.dim(); ++a)
        for (int b = 0; b < V.dim(); ++b)
            if (!(H.counit(V.c(a, b)) == H.scalar(a == b ? 1 : 0))) return false;
    return true;
}

bool satisfies_coassociativity(const Algebra& H, const Comodule& V) {
    const int n = V.dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Tensor2 rhs;
            for (int m = 0; m < n; ++m)
                for (const auto& [i, x] : V.c(a, m).terms())
                    for (const auto& [k, y] : V.c(m, b).terms()) accumulate(rhs, {i, k}, x * y);
            if (H.comultiply(V.c(a, b)) != rhs) return false;
        }
    return true;
}

namespace {

// Coefficient element of the plain tensor product at ((a',b'),(a,b)).
Element plain_coefficient(const Algebra& H, const Comodule& V, const Comodule& W, int ap, int bp, int a, int b) {
    return H.multiply(V.c(ap, a), W.c(bp, b));
}

}  // namespace

Matrix truncation_idempotent(const Algebra& H, const Comodule& V, const Comodule& W) {
    const int nv = V.dim(), nw = W.dim(), n = nv * nw;
    Matrix P(H.level(), n, n);
    for (int ap = 0; ap < nv; ++ap)
        for (int bp = 0; bp < nw; ++bp)
            for (int a = 0; a < nv; ++a)
                for (int b = 0; b < nw; ++b)
                    P.at(ap * nw + bp, a * nw + b) = H.counit(plain_coefficient(H, V, W, ap, bp, a, b));
    return P;
}

TruncatedTensor truncated_tensor(const Algebra& H, const Comodule& V, const Comodule& W) {
    TruncatedTensor T;
    T.left_dim = V.dim();
    T.right_dim = W.dim();
    T.projector = truncation_idempotent(H, V, W);
    T.image = column_space(T.projector);
    const int nw = W.dim(), k = T.image.basis.cols();
    std::vector<Element> coeff(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i) {
        const int row = T.image.pivot_rows[i];
        const int ap = row / nw, bp = row % nw;
        for (int col = 0; col < k; ++col) {
            Element acc;
            for (int plain = 0; plain < T.projector.rows(); ++plain) {
                const auto& bcoef = T.image.basis.at(plain, col);
                if (bcoef.is_zero()) continue;
                acc += bcoef * plain_coefficient(H, V, W, ap, bp, plain / nw, plain % nw);
            }
            coeff[i * k + col] = acc;
        }
    }
    T.product = Comodule(k, std::move(coeff));
    return T;
}

bool truncated_coaction_consistent(const Algebra& H, const Comodule& V, const Comodule& W, const TruncatedTensor& T) {
    const int nw = W.dim(), n = T.projector.rows(), k = T.image.basis.cols();
    for (int col = 0; col < k; ++col)
        for (int row = 0; row < n; ++row) {
            Element lhs, rhs;
            for (int plain = 0; plain < n; ++plain) {
                const auto& bcoef = T.image.basis.at(plain, col);
                if (!bcoef.is_zero())
                    lhs += bcoef * plain_coefficient(H, V, W, row / nw, row % nw, plain / nw, plain % nw);
            }
            for (int i = 0; i < k; ++i)
                if (!T.image.basis.at(row, i).is_zero()) rhs += T.image.basis.at(row, i) * T.product.c(i, col);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

namespace {

Matrix selection(const ImageBasis& img, int plain_dim, int level) {
    Matrix L(level, static_cast<int>(img.pivot_rows.size()), plain_dim);
    for (std::size_t i = 0; i < img.pivot_rows.size(); ++i) L.at(static_cast<int>(i), img.pivot_rows[i]) = CycloScalar(level, 1);
    return L;
}

}  // namespace

Matrix braiding_map(const Algebra& H, const Comodule& V, const Comodule& W) {
    const int nv = V.dim(), nw = W.dim(), level = H.level();
    Matrix sigma(level, nw * nv, nv * nw);
    for (int bp = 0; bp < nw; ++bp)
        for (int ap = 0; ap < nv; ++ap)
            for (int a = 0; a < nv; ++a)
                for (int b = 0; b < nw; ++b) sigma.at(bp * nv + ap, a * nw + b) = H.r_form(W.c(bp, b), V.c(ap, a));
    auto vw = column_space(truncation_idempotent(H, V, W));
    auto wv = column_space(truncation_idempotent(H, W, V));
    return selection(wv, nw * nv, level) * sigma * vw.basis;
}

Matrix braiding_inverse(const Algebra& H, const Comodule& V, const Comodule& W) {
    const int nv = V.dim(), nw = W.dim(), level = H.level();
    Matrix sigma(level, nv * nw, nw * nv);
    for (int ap = 0; ap < nv; ++ap)
        for (int bp = 0; bp < nw; ++bp)
            for (int b = 0; b < nw; ++b)
                for (int a = 0; a < nv; ++a) sigma.at(ap * nw + bp, b * nv + a) = H.r_bar(W.c(bp, b), V.c(ap, a));
    auto vw = column_space(truncation_idempotent(H, V, W));
    auto wv = column_space(truncation_idempotent(H, W, V));
    return selection(vw, nv * nw, level) * sigma * wv.basis;
}

Matrix ribbon_map(const Algebra& H, const Comodule& V) {
    Matrix N(H.level(), V.dim(), V.dim());
    for (int a = 0; a < V.dim(); ++a)
        for (int b = 0; b < V.dim(); ++b) N.at(a, b) = H.ribbon_form(V.c(a, b));
    return N;
}

namespace {

CycloScalar unit_multiple(const Algebra& H, const Element& x) {
    const Element one = H.unit();
    const auto& [k0, c0] = *one.terms().begin();
    CycloScalar c = x.coefficient(k0) / c0;
    if (!(x == c * one)) throw std::logic_error("trace is not a multiple of the unit");
    return c;
}

}  // namespace

CycloScalar comodule_trace(const Algebra& H, const Matrix& f, const Comodule& V) {
    const Element h = H.unit();
    Element acc;
    for (int j = 0; j < V.dim(); ++j)
        for (int l = 0; l < V.dim(); ++l) {
            if (f.at(j, l).is_zero()) continue;
            for (const auto& [k, c] : H.comultiply(H.multiply(h, V.c(l, j)))) {
                CycloScalar wv = H.pivotal_form(H.basis_element(k[1]));
                if (wv.is_zero()) continue;
                acc += (f.at(j, l) * c * wv) * H.counital_source(H.antipode(H.basis_element(k[0])));
            }
        }
    return unit_multiple(H, acc);
}

Element character(const Comodule& V) {
    Element chi;
    for (int a = 0; a < V.dim(); ++a) chi += V.c(a, a);
    return chi;
}

CycloScalar trace_of_identity_via_character(const Algebra& H, const Comodule& V) {
    Element T;
    for (int a = 0; a < V.dim(); ++a)
        for (int b = 0; b < V.dim(); ++b) T += H.pivotal_form(V.c(b, a)) * V.c(a, b);
    Element acc;
    for (const auto& [k, c] : H.comultiply(T)) {
        CycloScalar e = H.counit(H.basis_element(k[0]));
        if (!e.is_zero()) acc += (c * e) * H.counital_source(H.antipode(H.basis_element(k[1])));
    }
    return unit_multiple(H, acc);
}

bool left_triangle_holds(const Algebra& H, const Comodule& V) {
    const int n = V.dim();
    const Tensor2 unit_delta = H.comultiply(H.unit());
    for (int a = 0; a < n; ++a) {
        // lambda^{-1}: e_a -> sum 1' (x) e_{a'} eps(1'' c_{a'a})
        std::map<std::pair<Index, int>, CycloScalar> step1;
        for (const auto& [k, c] : unit_delta)
            for (int ap = 0; ap < n; ++ap) {
                CycloScalar e = H.counit(H.multiply(H.basis_element(k[1]), V.c(ap, a)));
                if (!e.is_zero()) step1[{k[0], ap}] += c * e;
            }
        // coev (x) id, then id (x) ev: (b', m) components in V (x) H
        std::map<std::pair<int, Index>, CycloScalar> step2;
        for (const auto& [key, c] : step1) {
            auto [h, ap] = key;
            for (int b = 0; b < n; ++b)
                for (int bp = 0; bp < n; ++bp) {
                    CycloScalar e = H.counit(H.multiply(H.basis_element(h), V.c(bp, b)));
                    if (e.is_zero()) continue;
                    const Element src = H.counital_source(V.c(b, ap));
                    for (const auto& [m, s] : src.terms()) step2[{bp, m}] += c * e * s;
                }
        }
        // rho: e_{b'} (x) h -> sum e_{b''} eps(c_{b''b'} h)
        std::vector<CycloScalar> result(n);
        for (const auto& [key, c] : step2) {
            auto [bp, m] = key;
            for (int bpp = 0; bpp < n; ++bpp) result[bpp] += c * H.counit(H.multiply(V.c(bpp, bp), H.basis_element(m)));
        }
        for (int b = 0; b < n; ++b)
            if (!(result[b] == H.scalar(a == b ? 1 : 0))) return false;
    }
    return true;
}

bool right_triangle_holds(const Algebra& H, const Comodule& V) {
    const int n = V.dim();
    const Comodule D = dual_comodule(H, V);
    for (int a = 0; a < n; ++a) {
        // rho^{-1}: e^a -> sum e^b (x) eps_s(c*_{ba})
        std::map<std::pair<int, Index>, CycloScalar> step1;
        for (int b = 0; b < n; ++b) {
            const Element src = H.counital_source(D.c(b, a));
            for (const auto& [m, s] : src.terms()) step1[{b, m}] += s;
        }
        // id (x) coev, then ev (x) id: (m2, d) components in H (x) V*
        std::map<std::pair<Index, int>, CycloScalar> step2;
        for (const auto& [key, c] : step1) {
            auto [b, m] = key;
            for (int d = 0; d < n; ++d)
                for (int dp = 0; dp < n; ++dp) {
                    CycloScalar e = H.counit(H.multiply(H.basis_element(m), V.c(dp, d)));
                    if (e.is_zero()) continue;
                    const Element src = H.counital_source(V.c(b, dp));
                    for (const auto& [m2, s] : src.terms()) step2[{m2, d}] += c * e * s;
                }
        }
        // lambda: h (x) e^d -> sum e^{d''} eps(h c*_{d''d})
        std::vector<CycloScalar> result(n);
        for (const auto& [key, c] : step2) {
            auto [m2, d] = key;
            for (int dpp = 0; dpp < n; ++dpp) result[dpp] += c * H.counit(H.multiply(H.basis_element(m2), D.c(dpp, d)));
        }
        for (int b = 0; b < n; ++b)
            if (!(result[b] == H.scalar(a == b ? 1 : 0))) return false;
    }
    return true;
}

}  // namespace wha
