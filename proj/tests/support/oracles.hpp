#pragma once

// Independent oracles used only by tests. These recompute expected values by
// routes different from the library implementation (Sylvester determinants,
// closed-form discriminants, brute-force lattice membership).

#include <vector>

#include "mono/polynomial.hpp"

namespace oracle {

using mono::Int;
using mono::Polynomial;
using mono::Rat;

// Res(f, g) as the determinant of the Sylvester matrix, by fraction-free
// Gaussian elimination over the rationals.
inline Rat sylvester_resultant(const Polynomial& f, const Polynomial& g)
{
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) throw mono::Error("oracle: zero polynomial");
    int N = m + n;
    if (N == 0) return Rat(1);
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(N),
                                    std::vector<Rat>(static_cast<std::size_t>(N), Rat(0)));
    for (int r = 0; r < n; r++)
        for (int k = 0; k <= m; k++) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f.coeffs()[static_cast<std::size_t>(k)];
    for (int r = 0; r < m; r++)
        for (int k = 0; k <= n; k++) a[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = g.coeffs()[static_cast<std::size_t>(k)];
    // plain rational elimination with partial pivoting by first nonzero
    Rat det(1);
    int sign = 1;
    for (int col = 0; col < N; col++) {
        int piv = -1;
        for (int r = col; r < N; r++)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(col)]);
            sign = -sign;
        }
        Rat p = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det *= p;
        for (int r = col + 1; r < N; r++) {
            Rat factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / p;
            if (factor == 0) continue;
            for (int c2 = col; c2 < N; c2++)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] -=
                    factor * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c2)];
        }
    }
    return sign > 0 ? det : Rat(-det);
}

// Cubic discriminant 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2.
inline Rat cubic_discriminant(const Rat& a, const Rat& b, const Rat& c, const Rat& d)
{
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
           27 * a * a * d * d;
}

// Depressed cubic X^3 + pX + q: -4p^3 - 27q^2.
inline Rat depressed_cubic_discriminant(const Rat& p, const Rat& q)
{
    return -4 * p * p * p - 27 * q * q;
}

}  // namespace oracle
