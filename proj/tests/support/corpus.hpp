#pragma once

// Deterministic random corpora shared by the property tests and the
// acceptance suite.

#include "mono/number_field.hpp"
#include "mono/order.hpp"

namespace corpus {

using namespace mono;

inline const std::vector<NumberField>& field_pool()
{
    static const std::vector<NumberField> pool = [] {
        std::vector<NumberField> v;
        for (const char* s : {"x^3-x-1", "x^3+x-3", "x^3-2", "x^4-x-1", "x^4+2x^2-x+1",
                              "x^4-x^3-1", "x^5-x-1", "x^5-x^3-1"})
            v.emplace_back(parse_polynomial(s));
        return v;
    }();
    return pool;
}

// A generator of K with numerators and denominators bounded by `height`.
inline FieldElement random_generator(const NumberField& K, Rng& rng, long height = 20)
{
    while (true) {
        std::vector<Rat> c;
        for (int i = 0; i < K.degree(); i++) {
            Rat q(rng.range(-height, height), rng.range(1, height));
            q.canonicalize();
            c.push_back(q);
        }
        FieldElement xi = K.from_coords(std::move(c));
        if (is_generator(xi) && !xi.is_zero()) return xi;
    }
}

// Product of at most `steps` elementary matrices: a GL2(Z) element.
inline Mobius random_gl2z(Rng& rng, int steps = 10)
{
    Mobius u(Rat(1), Rat(0), Rat(0), Rat(1));
    int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(steps)));
    for (int i = 0; i < k; i++) {
        switch (rng.below(4)) {
            case 0: u = u * Mobius(Rat(1), Rat(rng.range(-3, 3)), Rat(0), Rat(1)); break;
            case 1: u = u * Mobius(Rat(1), Rat(0), Rat(rng.range(-3, 3)), Rat(1)); break;
            case 2: u = u * Mobius(Rat(0), Rat(1), Rat(1), Rat(0)); break;
            default: u = u * Mobius(Rat(-1), Rat(0), Rat(0), Rat(1)); break;
        }
    }
    return u;
}

// Random integer binary form of degree n with coefficients in [-bound, bound].
inline BinaryForm random_form(Rng& rng, int n, long bound)
{
    std::vector<Int> a;
    for (int i = 0; i <= n; i++) a.emplace_back(rng.range(-bound, bound));
    return BinaryForm(std::move(a));
}

}  // namespace corpus
