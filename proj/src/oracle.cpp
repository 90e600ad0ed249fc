#include "trop/oracle.hpp"

#include <algorithm>

namespace trop {

EtaleAlgebra::EtaleAlgebra(const LocalBinomialSystem& sys, FieldSpec field)
    : sys_(sys), field_(field) {
    int n = sys.n;
    if (static_cast<int>(sys.deltas.size()) != n)
        throw OracleError("system size mismatch");
    Mat M = sys.deltas;
    Int dd = det(M);
    if (dd == 0) throw OracleError("singular binomial system");
    Int mm = abs(dd);
    if (field.kind == FieldKind::PrimeField && mm % field.characteristic == 0)
        throw OracleError("not etale: characteristic divides the degree");
    snf_ = snf(M);
    vinv_ = unimodular_inverse(snf_.V);
    m_ = static_cast<long>(mm);
    diag_.resize(n);
    for (int i = 0; i < n; ++i) diag_[i] = snf_.D[i][i];
    for (int i = 0; i < n; ++i) {
        // canonical square-class representatives as concrete field elements
        alpha_lift_.push_back(FieldElem(field, Rat(sys.alphas[i].rep)));
        FieldElem bl(field, Rat(sys.betas[i].rep));
        ratio_.push_back(-(bl / alpha_lift_.back()));
    }
    // basis representatives: r V^{-1} for 0 <= r_i < d_i
    Vec r(n, 0);
    while (true) {
        Vec rep(n, 0);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) rep[j] += r[i] * vinv_[i][j];
        basis_index_[rep] = basis_.size();
        basis_.push_back(rep);
        int c = 0;
        while (c < n) {
            if (++r[c] < diag_[c]) break;
            r[c] = 0;
            ++c;
        }
        if (c == n) break;
    }
    if (static_cast<long>(basis_.size()) != m_)
        throw OracleError("basis size mismatch");
}

EtaleAlgebra::Reduced EtaleAlgebra::reduce(const Vec& u) const {
    int n = sys_.n;
    // SNF coordinates u' = u V, Euclidean remainders, back via V^{-1}
    Vec up(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) up[j] += u[i] * snf_.V[i][j];
    Vec q(n), rm(n);
    for (int i = 0; i < n; ++i) {
        Int qq = up[i] / diag_[i];
        Int rr = up[i] - qq * diag_[i];
        if (rr < 0) {
            rr += diag_[i];
            qq -= 1;
        }
        q[i] = qq;
        rm[i] = rr;
    }
    Vec rep(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) rep[j] += rm[i] * vinv_[i][j];
    // u - rep = y.M with y = q U; scalar = prod ratio_i^{y_i}
    Vec y(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) y[j] += q[i] * snf_.U[i][j];
    FieldElem s = FieldElem::one(field_);
    for (int i = 0; i < n; ++i) s = s * ratio_[i].pow(y[i]);
    return {s, rep, basis_index_.at(rep)};
}

FieldElem EtaleAlgebra::trace(const FieldElem& c, const Vec& w) const {
    FieldElem t = FieldElem::zero(field_);
    for (size_t r = 0; r < basis_.size(); ++r) {
        Reduced red = reduce(vec_add(w, basis_[r]));
        if (red.index == r) t = t + c * red.scalar;
    }
    return t;
}

EtaleAlgebra::Element EtaleAlgebra::monomial_element(const FieldElem& c,
                                                     const Vec& w) const {
    Element e(m_, FieldElem::zero(field_));
    Reduced red = reduce(w);
    e[red.index] = e[red.index] + c * red.scalar;
    return e;
}

EtaleAlgebra::Element EtaleAlgebra::el_add(const Element& a,
                                           const Element& b) const {
    Element e = a;
    for (long i = 0; i < m_; ++i) e[i] = e[i] + b[i];
    return e;
}

EtaleAlgebra::Element EtaleAlgebra::el_mul(const Element& a,
                                           const Element& b) const {
    Element e(m_, FieldElem::zero(field_));
    for (long i = 0; i < m_; ++i) {
        if (a[i].is_zero()) continue;
        for (long j = 0; j < m_; ++j) {
            if (b[j].is_zero()) continue;
            Reduced red = reduce(vec_add(basis_[i], basis_[j]));
            e[red.index] = e[red.index] + a[i] * b[j] * red.scalar;
        }
    }
    return e;
}

FieldElem EtaleAlgebra::trace_element(const Element& a) const {
    FieldElem t = FieldElem::zero(field_);
    for (long i = 0; i < m_; ++i)
        if (!a[i].is_zero()) t = t + a[i] * trace(FieldElem::one(field_), basis_[i]);
    return t;
}

EtaleAlgebra build_algebra(const LocalBinomialSystem& sys, FieldSpec field) {
    return EtaleAlgebra(sys, field);
}

FieldElem trace_of_element(const EtaleAlgebra& alg, const FieldElem& c,
                           const Vec& w) {
    return alg.trace(c, w);
}

GramForm gram_of_unit(const EtaleAlgebra& alg, const FieldElem& c, const Vec& w) {
    long m = alg.m();
    GramForm g;
    g.unit_scalar = c;
    g.unit_exp = w;
    g.matrix.assign(m, std::vector<FieldElem>(m, FieldElem::zero(alg.field())));
    for (long r = 0; r < m; ++r)
        for (long s = r; s < m; ++s) {
            Vec u = vec_add(w, vec_add(alg.basis()[r], alg.basis()[s]));
            auto red = alg.reduce(u);
            FieldElem v = alg.trace(c * red.scalar, red.rep);
            g.matrix[r][s] = v;
            g.matrix[s][r] = v;
        }
    return g;
}

GWElement diagonalize_congruence(const GramForm& g, FieldSpec field) {
    long n = static_cast<long>(g.matrix.size());
    auto a = g.matrix;
    auto row_axpy = [&](long i, long k, const FieldElem& f) {
        for (long j = 0; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
    };
    auto col_axpy = [&](long i, long k, const FieldElem& f) {
        for (long j = 0; j < n; ++j) a[j][i] = a[j][i] - f * a[j][k];
    };
    auto swap_rc = [&](long i, long k) {
        std::swap(a[i], a[k]);
        for (long j = 0; j < n; ++j) std::swap(a[j][i], a[j][k]);
    };
    GWElement out = GWElement::zero(field);
    long k = 0;
    while (k < n) {
        long piv = -1;
        for (long i = k; i < n; ++i)
            if (!a[i][i].is_zero()) {
                piv = i;
                break;
            }
        if (piv >= 0) {
            if (piv != k) swap_rc(piv, k);
            for (long i = k + 1; i < n; ++i) {
                if (a[i][k].is_zero()) continue;
                FieldElem f = a[i][k] / a[k][k];
                row_axpy(i, k, f);
                col_axpy(i, k, f);
            }
            out.diag.push_back(square_class_reduce(a[k][k]));
            ++k;
            continue;
        }
        // all remaining diagonal entries vanish: split off a hyperbolic block
        long bi = -1, bj = -1;
        for (long i = k; i < n && bi < 0; ++i)
            for (long j = i + 1; j < n; ++j)
                if (!a[i][j].is_zero()) {
                    bi = i;
                    bj = j;
                    break;
                }
        if (bi < 0) throw OracleError("degenerate form");
        if (bi != k) swap_rc(bi, k);
        if (bj != k + 1) swap_rc(bj, k + 1);
        FieldElem w = a[k][k + 1];
        for (long i = k + 2; i < n; ++i) {
            FieldElem u = a[i][k], v = a[i][k + 1];
            if (!v.is_zero()) {
                FieldElem f = v / w;
                row_axpy(i, k, f);
                col_axpy(i, k, f);
            }
            if (!u.is_zero()) {
                FieldElem f = u / w;
                row_axpy(i, k + 1, f);
                col_axpy(i, k + 1, f);
            }
        }
        ++out.hyperbolics;
        k += 2;
    }
    out.normalize();
    return out;
}

GWElement oracle_multiplicity(const LocalBinomialSystem& sys, FieldSpec field) {
    EtaleAlgebra alg(sys, field);
    Int dd = det(sys.deltas);
    FieldElem c(field, Rat(dd));
    for (auto& al : sys.alphas) c = c * FieldElem(field, Rat(al.rep));
    Vec w = sys.anchor;
    for (auto& x : w) x -= 1;  // x^{sum I^i - (1,...,1)}
    return diagonalize_congruence(gram_of_unit(alg, c, w), field);
}

EtaleAlgebra::Element symbolic_jacobian(const EtaleAlgebra& alg) {
    const LocalBinomialSystem& sys = alg.system();
    int n = sys.n;
    FieldSpec field = alg.field();
    // Differentiates the normalized binomials g_i = alpha_i x^{Delta^i} +
    // beta_i (same algebra); the closed form for this normalization is
    // det(Delta) * prod(alpha_i) * x^{sum Delta^i - e}.
    std::vector<std::vector<EtaleAlgebra::Element>> J(
        n, std::vector<EtaleAlgebra::Element>(n));
    for (int i = 0; i < n; ++i) {
        Vec I = sys.deltas[i], Jexp(n, 0);
        for (int j = 0; j < n; ++j) {
            Vec ej(n, 0);
            ej[j] = 1;
            EtaleAlgebra::Element t1 = alg.monomial_element(
                FieldElem(field, Rat(sys.alphas[i].rep)) * FieldElem(field, Rat(I[j])),
                vec_sub(I, ej));
            EtaleAlgebra::Element t2 = alg.monomial_element(
                FieldElem(field, Rat(sys.betas[i].rep)) * FieldElem(field, Rat(Jexp[j])),
                vec_sub(Jexp, ej));
            J[i][j] = alg.el_add(t1, t2);
        }
    }
    // determinant by permutation expansion (n <= 3)
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    EtaleAlgebra::Element out(alg.m(), FieldElem::zero(field));
    do {
        int sgn = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sgn = -sgn;
        EtaleAlgebra::Element term =
            alg.monomial_element(FieldElem(field, Rat(sgn)), Vec(n, 0));
        for (int i = 0; i < n; ++i) term = alg.el_mul(term, J[i][perm[i]]);
        out = alg.el_add(out, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool verify_main_theorem(const IntersectionDatum& d, FieldSpec field) {
    GWElement oracle = oracle_multiplicity(local_binomial_system(d), field);
    GWElement combinatorial = enriched_multiplicity(d);
    return gw_equal(oracle, combinatorial);
}

}  // namespace trop
