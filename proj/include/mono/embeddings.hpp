#pragma once

#include <array>

#include "mono/number_field.hpp"
#include "mono/roots.hpp"

namespace mono {

// The n complex embeddings of K at a working precision, in the canonical
// order (ascending real part, ties by ascending imaginary part).
class EmbeddingSet {
  public:
    EmbeddingSet(const NumberField& K, unsigned prec);

    const NumberField& field() const { return field_; }
    unsigned precision() const { return prec_; }
    int count() const { return static_cast<int>(roots_.size()); }
    const std::vector<MpComplex>& roots() const { return roots_; }
    const mpf_class& residual_bound() const { return residual_; }

    // sigma_i(xi), 0-based index
    MpComplex embed(const FieldElement& xi, int i) const;
    std::vector<MpComplex> embed_all(const FieldElement& xi) const;

  private:
    NumberField field_;
    unsigned prec_;
    std::vector<MpComplex> roots_;
    mpf_class residual_;
};

// cr_ijkl(alpha) = (a_i - a_j)(a_k - a_l) / ((a_i - a_k)(a_j - a_l)) over the
// conjugates of alpha; indices 0-based and pairwise distinct, n >= 4.
MpComplex cross_ratio(const FieldElement& alpha, const std::array<int, 4>& t,
                      const EmbeddingSet& E);

// All ratios cr_ijkl(beta)/cr_ijkl(alpha) over ordered 4-tuples of distinct
// indices, n(n-1)(n-2)(n-3) of them.
struct EpsilonTable {
    NumberField field;
    int n;
    unsigned prec;
    std::vector<std::array<int, 4>> tuples;  // lexicographic
    std::vector<MpComplex> eps;
    std::vector<MpComplex> cr_alpha, cr_beta;

    const MpComplex& at(int i, int j, int k, int l) const;
};

EpsilonTable epsilon_table(const FieldElement& alpha, const FieldElement& beta,
                           const EmbeddingSet& E);

// Numeric verification of the cross-ratio and epsilon identities. Families:
//   sum1:      cr_ijkl + cr_ilkj = 1                     (n >= 4)
//   symmetry:  eps_ijkl = eps_jilk = eps_klij = eps_lkji,
//              eps_ikjl = eps_ijkl^-1, eps_ijkl/eps_ijlk = eps_ilkj
//   cramer:    cr_ijkl(alpha) = (eps_ilkj - 1)/(eps_ilkj - eps_ijkl),
//              skipping tuples with |eps_ilkj - eps_ijkl| < tol
//   fifth:     eps_ijkl / eps_ijkm = eps_jmlk            (n >= 5)
//   sixfold:   (e_1234-1)(e_1245-1)(e_1253-1)
//                = (e_1243-1)(e_1254-1)(e_1235-1)        (n >= 5)
struct IdentityReport {
    struct Family {
        std::string name;
        bool applicable;
        bool skipped;  // e.g. all denominators degenerate
        double max_violation;
        std::string note;
    };
    std::vector<Family> families;
    bool all_pass(double tol) const;
};
IdentityReport check_identities(const EpsilonTable& T, double tol);

// P(T) = prod over tuples of (T - eps): passes when every coefficient is
// within tol of a rational integer and the constant term is within tol of
// +-1. The tuple multiset is Galois-stable and inversion-closed, so this
// certifies that all the eps are algebraic units.
struct UnitCertificate {
    bool passed;
    double max_integer_distance;
    double constant_term_distance;  // to the nearest of +1/-1
    int degree;
};
UnitCertificate unit_certificate(const EpsilonTable& T, double tol);

}  // namespace mono
