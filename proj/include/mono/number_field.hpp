#pragma once

#include <memory>

#include "mono/polynomial.hpp"

namespace mono {

class FieldElement;

// K = Q[X]/(f0) for a primitive integral irreducible f0 of degree >= 2.
// Elements are rational coordinate vectors over the power basis of theta,
// the class of X. Handles are immutable and cheap to copy.
class NumberField {
  public:
    NumberField() = default;  // null handle; usable only after real construction
    explicit NumberField(const Polynomial& f0);

    int degree() const;
    const Polynomial& defining_poly() const;

    FieldElement theta() const;
    FieldElement from_coords(std::vector<Rat> ascending) const;
    FieldElement from_rational(const Rat& q) const;
    FieldElement zero() const;
    FieldElement one() const;

    // trace of theta^k, k = 0 .. 2n-2 (power sums via Newton's identities)
    const Rat& power_sum(int k) const;

    bool same_field(const NumberField& o) const { return impl_ == o.impl_; }

    struct Impl;
    const std::shared_ptr<const Impl>& impl() const { return impl_; }

  private:
    std::shared_ptr<const Impl> impl_;
};

class FieldElement {
  public:
    FieldElement() = default;

    const NumberField& field() const { return field_; }
    const std::vector<Rat>& coords() const { return c_; }  // ascending powers
    int degree_of_field() const { return static_cast<int>(c_.size()); }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_part() const { return c_.empty() ? Rat(0) : c_[0]; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement scaled(const Rat& s) const;
    FieldElement inverse() const;  // error on zero
    FieldElement operator/(const FieldElement& o) const;
    FieldElement pow(int k) const;  // k may be negative

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    Rat trace() const;

    std::string str() const;

  private:
    friend class NumberField;
    FieldElement(NumberField f, std::vector<Rat> c) : field_(std::move(f)), c_(std::move(c)) {}
    NumberField field_;
    std::vector<Rat> c_;
};

// 2x2 rational matrix acting on P^1(K); det != 0 enforced.
struct Mobius {
    Rat a, b, c, d;

    Mobius(Rat a_, Rat b_, Rat c_, Rat d_);
    Rat det() const { return a * d - b * c; }
    Mobius operator*(const Mobius& o) const;
    Mobius inverse() const;

    // integer entries with gcd 1, first nonzero entry positive
    Mobius normalized_primitive() const;

    std::string str() const;
};

// A point of P^1(K): a field element or infinity. Infinity keeps the field
// handle so a Mobius image can land back in K.
struct P1Point {
    bool infinite = false;
    FieldElement value;

    static P1Point infinity(const NumberField& K);
    static P1Point of(FieldElement v) { return P1Point{false, std::move(v)}; }
    const NumberField& field() const { return value.field(); }
};

// C xi with the conventions: infinity if xi = inf and c = 0; a/c if xi = inf
// and c != 0; infinity if c != 0 and xi = -d/c.
P1Point mobius_apply(const Mobius& C, const P1Point& xi);
FieldElement mobius_apply_element(const Mobius& C, const FieldElement& xi);  // error on pole

// monic minimal polynomial over Q (degree divides n)
Polynomial min_poly(const FieldElement& xi);
// integer primitive with positive leading coefficient: f_xi
Polynomial primitive_min_poly(const FieldElement& xi);
// true iff Q(xi) = K
bool is_generator(const FieldElement& xi);

// An exact root of f in K, if any: numeric embedding match, coordinate
// rounding, exact verification. Returns the root whose first canonical
// embedding is smallest in the (Re, Im) order. Throws "precision exhausted"
// when rounding fails at the requested precision.
std::optional<FieldElement> root_in_field(const Polynomial& f, const NumberField& K,
                                          unsigned prec = 256);

}  // namespace mono
