#pragma once

#include "mono/module.hpp"

namespace mono {

// An order: a full module that is a ring containing 1. When built from a
// generator alpha it also remembers the omega-basis 1, w_1, ..., w_{n-1}
// of Nakagawa/Simon (w_i = a_0 a^i + a_1 a^{i-1} + ... + a_{i-1} a).
class Order {
  public:
    explicit Order(FullModule m);

    const FullModule& module() const { return module_; }
    const NumberField& field() const { return module_.field(); }
    const BaseRing& base() const { return module_.base(); }

    const std::optional<std::vector<FieldElement>>& omega_basis() const { return omega_; }

    // products of the stored basis vectors as integer coordinate rows over
    // that same basis (closure makes them integral)
    std::vector<std::vector<Int>> structure_table() const;

    Rat discriminant() const { return module_.discriminant(); }
    bool operator==(const Order& o) const { return module_ == o.module_; }

  private:
    friend Order order_omega_basis(const FieldElement&, const BaseRing&);
    FullModule module_;
    std::optional<std::vector<FieldElement>> omega_;
};

// The three constructions of the invariant order Z_alpha; they agree.
Order order_omega_basis(const FieldElement& alpha, const BaseRing& base);
Order order_intersection(const FieldElement& alpha, const BaseRing& base);
Order order_scalars(const FieldElement& alpha, const BaseRing& base);

// omega_i elements for f = primitive_min_poly(alpha)
std::vector<FieldElement> omega_elements(const FieldElement& alpha);

// Binary form a_0 X^n + a_1 X^{n-1} Y + ... + a_n Y^n; any integer
// coefficients, including all zero.
struct BinaryForm {
    std::vector<Int> a;  // a_0 .. a_n

    explicit BinaryForm(std::vector<Int> coeffs);
    static BinaryForm homogenize(const Polynomial& f);
    int form_degree() const { return static_cast<int>(a.size()) - 1; }
    Int eval(const Int& x, const Int& y) const;
    Polynomial dehomogenized() const;  // F(X, 1)
    std::string str() const;
};

// Multiplication table of the invariant ring of a binary form: products
// w_i w_j expressed over 1, w_1, ..., w_{n-1} (w_n := -a_n enters the
// constant column). Defined for every form of degree >= 2.
struct InvariantRingTable {
    BinaryForm form;
    int n;
    // table[i-1][j-1] = coordinates of w_i w_j over (1, w_1, .., w_{n-1})
    std::vector<std::vector<std::vector<Int>>> table;

    // multiply coordinate vectors (c_0 + sum c_k w_k) using the table
    std::vector<Int> multiply(const std::vector<Int>& x, const std::vector<Int>& y) const;
    bool is_commutative() const;
    bool is_associative() const;
};

InvariantRingTable invariant_ring_table(const BinaryForm& F);

// Primitivity: no order O' and integer a > 1 with O = Z + a O'. The witness
// carries (a, O').
struct PrimitivityResult {
    bool primitive;
    Int witness_a;
    std::optional<Order> witness_order;
};
PrimitivityResult is_primitive_order(const Order& O);

}  // namespace mono
