#pragma once

#include "mono/intmat.hpp"
#include "mono/number_field.hpp"

namespace mono {

// Base ring: Z, or the S-integers Z_S for a finite set of primes S. Z_S is a
// PID whose units are +- products of the primes in S; modules over it reuse
// the Z machinery through S-free normalization.
struct BaseRing {
    std::vector<Int> S;  // sorted, distinct primes; empty means Z

    static BaseRing integers() { return {}; }
    static BaseRing s_integers(std::vector<Int> primes);

    bool is_z() const { return S.empty(); }
    bool same(const BaseRing& o) const { return S == o.S; }
    // true iff x is a unit of the base ring
    bool is_unit(const Int& x) const;
    std::string str() const;
};

// Full-rank module in K over the base ring, canonically represented as
// (1/denom) * row lattice of an HNF basis matrix over the power basis.
// Over Z_S both denom and the HNF are S-free, so equal modules have equal
// representations.
class FullModule {
  public:
    FullModule(NumberField K, BaseRing base, Int denom, IntMat basis_rows);

    static FullModule from_generators(const std::vector<FieldElement>& gens,
                                      const BaseRing& base);
    // the A-span of 1, xi, ..., xi^(n-1)
    static FullModule power_module(const FieldElement& xi, const BaseRing& base);

    const NumberField& field() const { return field_; }
    const BaseRing& base() const { return base_; }
    const Int& denom() const { return denom_; }
    const IntMat& basis() const { return basis_; }
    int rank() const { return basis_.rows; }

    std::vector<FieldElement> basis_elements() const;
    FieldElement basis_element(int i) const;

    bool operator==(const FullModule& o) const;
    bool contains(const FieldElement& x) const;
    // 1 in M and M closed under multiplication (one basis inversion, then
    // cheap coordinate checks)
    bool is_ring() const;

    FullModule intersect(const FullModule& o) const;
    FullModule sum(const FullModule& o) const;
    // the module x * M
    FullModule scaled_by(const FieldElement& x) const;

    // {xi in K : xi M <= M}
    FullModule multiplier_ring() const;

    // [M : N] for N <= M (error, with witness, if N is not contained)
    Rat index_of(const FullModule& sub) const;

    // det(Tr(g_i g_j)); over Z_S the S-free representative
    Rat discriminant() const;

    // basis with first vector exactly 1 (requires 1 in M and M cap Q = A);
    // rows are coordinates times denom(), lower-triangular style
    IntMat unit_first_basis() const;

    std::string key() const;  // canonical serialization, usable as a map key

  private:
    NumberField field_;
    BaseRing base_;
    Int denom_;
    IntMat basis_;

    void canonicalize();
};

}  // namespace mono
