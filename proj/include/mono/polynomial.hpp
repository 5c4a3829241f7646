#pragma once

#include <initializer_list>
#include <utility>

#include "mono/common.hpp"

namespace mono {

// Dense univariate polynomial with rational coefficients, stored leading
// coefficient first. The zero polynomial is the empty coefficient vector;
// otherwise the leading coefficient is nonzero.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> leading_first);
    Polynomial(std::initializer_list<long> leading_first);

    static Polynomial constant(const Rat& c);
    // c * X^k
    static Polynomial monomial(const Rat& c, int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    const Rat& lc() const;
    // coefficient of X^k (0 outside range)
    Rat coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }  // leading first

    bool is_integral() const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rat& s) const;

    Rat eval(const Rat& x) const;
    Polynomial derivative() const;

    // f(s X), coefficients exact
    Polynomial compose_scale(const Rat& s) const;
    // X^deg * f(1/X)
    Polynomial reversed() const;

    // quotient and remainder over the rationals (g nonzero)
    static std::pair<Polynomial, Polynomial> divrem(const Polynomial& f, const Polynomial& g);
    // exact division test; returns quotient when g | f
    static std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

    std::string str(const std::string& var = "x") const;

  private:
    std::vector<Rat> c_;
    void normalize();
};

// gcd of coefficients (positive), and f/content with positive leading
// coefficient. Requires f nonzero with integer coefficients.
std::pair<Int, Polynomial> content_and_primitive(const Polynomial& f);

// Res(f, g), exact, via fraction-free subresultant elimination.
Rat resultant(const Polynomial& f, const Polynomial& g);

// (-1)^{n(n-1)/2} Res(f, f') / lc(f), n = deg f >= 2
Rat poly_discriminant(const Polynomial& f);

// monic gcd over the rationals
Polynomial poly_gcd(Polynomial a, Polynomial b);

// monic g = gcd(a, b) together with u, v such that u a + v b = g
struct XgcdResult {
    Polynomial g, u, v;
};
XgcdResult poly_xgcd(const Polynomial& a, const Polynomial& b);

// Irreducibility over Q for primitive integral f, deg <= 8. Returns a
// nontrivial factor when reducible, std::nullopt when irreducible.
std::optional<Polynomial> find_factor(const Polynomial& f);
bool is_irreducible(const Polynomial& f);

// Text form "c_k x^k +- ... +- c_0", x case-insensitive; exponents in any
// order, repeated powers accumulate.
Polynomial parse_polynomial(const std::string& text);

}  // namespace mono
