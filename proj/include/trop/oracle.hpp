#pragma once

#include "trop/enriched.hpp"

namespace trop {

struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The etale algebra E = k[x^{+-1}]/(alpha_i x^{I^i} + beta_i x^{J^i}) of a
// local binomial system, presented on the monomial basis of Z^n / L where L
// is the lattice spanned by the Delta^i.  On E, x^{Delta^i} = -beta_i/alpha_i.
class EtaleAlgebra {
  public:
    EtaleAlgebra(const LocalBinomialSystem& sys, FieldSpec field);

    long m() const { return m_; }
    const LocalBinomialSystem& system() const { return sys_; }
    const SNFDecomposition& snf_data() const { return snf_; }
    const std::vector<Vec>& basis() const { return basis_; }
    const FieldSpec& field() const { return field_; }

    // x^u = scalar * x^{rep} with rep a basis representative.
    struct Reduced {
        FieldElem scalar;
        Vec rep;
        size_t index;
    };
    Reduced reduce(const Vec& u) const;

    // trace of multiplication by c * x^w
    FieldElem trace(const FieldElem& c, const Vec& w) const;

    // elements as coordinate vectors over the monomial basis
    using Element = std::vector<FieldElem>;
    Element monomial_element(const FieldElem& c, const Vec& w) const;
    Element el_add(const Element& a, const Element& b) const;
    Element el_mul(const Element& a, const Element& b) const;
    FieldElem trace_element(const Element& a) const;

  private:
    LocalBinomialSystem sys_;
    FieldSpec field_;
    SNFDecomposition snf_;
    Mat vinv_;                       // V^{-1}
    long m_ = 0;
    std::vector<Int> diag_;          // SNF diagonal
    std::vector<Vec> basis_;         // exponent representatives
    std::map<Vec, size_t> basis_index_;
    std::vector<FieldElem> ratio_;   // -beta_i / alpha_i (canonical lifts)
    std::vector<FieldElem> alpha_lift_;
};

struct GramForm {
    std::vector<std::vector<FieldElem>> matrix;  // symmetric, nonsingular
    FieldElem unit_scalar;                       // the c of c * x^w
    Vec unit_exp;
};

EtaleAlgebra build_algebra(const LocalBinomialSystem& sys, FieldSpec field);
FieldElem trace_of_element(const EtaleAlgebra& alg, const FieldElem& c,
                           const Vec& w);
GramForm gram_of_unit(const EtaleAlgebra& alg, const FieldElem& c, const Vec& w);
// Symmetric Gauss congruence; zero diagonal blocks split off as h.
GWElement diagonalize_congruence(const GramForm& g, FieldSpec field);

// Trace form class of the Jacobian unit det(Delta) * prod(alpha_i) * x^{v0-e}.
GWElement oracle_multiplicity(const LocalBinomialSystem& sys, FieldSpec field);

// Jacobian determinant computed by symbolic differentiation of the binomials
// (debug cross-check of the closed-form monomial unit).
EtaleAlgebra::Element symbolic_jacobian(const EtaleAlgebra& alg);

bool verify_main_theorem(const IntersectionDatum& d, FieldSpec field);

}  // namespace trop
