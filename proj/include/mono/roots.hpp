#pragma once

#include "mono/polynomial.hpp"

namespace mono {

// Complex number on GMP floats at a fixed working precision.
struct MpComplex {
    mpf_class re, im;

    MpComplex() = default;
    MpComplex(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}
    static MpComplex zero(unsigned prec) { return {mpf_class(0, prec), mpf_class(0, prec)}; }

    MpComplex operator+(const MpComplex& o) const { return {re + o.re, im + o.im}; }
    MpComplex operator-(const MpComplex& o) const { return {re - o.re, im - o.im}; }
    MpComplex operator*(const MpComplex& o) const
    {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    MpComplex operator/(const MpComplex& o) const
    {
        mpf_class d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    MpComplex conj() const { return {re, mpf_class(-im)}; }
    mpf_class norm() const { return re * re + im * im; }
    mpf_class abs() const { return sqrt(norm()); }
};

// Number of real roots of a squarefree-or-not polynomial (counted without
// multiplicity), by Sturm's theorem. Exact.
int count_real_roots(const Polynomial& f);

// All complex roots of f (deg >= 1, squarefree), to absolute accuracy about
// 2^-prec, in the canonical order: ascending real part, ties by ascending
// imaginary part. Real roots carry an exactly zero imaginary part and come
// from certified rational bisection; complex roots come in exact conjugate
// pairs. Throws Error("raise precision") if residual separation fails.
std::vector<MpComplex> canonical_roots(const Polynomial& f, unsigned prec);

// Largest |f(z)|/|f'(z)| over the returned roots at the given precision.
mpf_class roots_residual_bound(const Polynomial& f, const std::vector<MpComplex>& roots,
                               unsigned prec);

MpComplex eval_complex(const Polynomial& f, const MpComplex& z, unsigned prec);

// Continued-fraction rationalization: nearest rational with denominator
// below 2^(prec/4) within 2^-(prec/2) of x, if one exists.
std::optional<Rat> rationalize(const mpf_class& x, unsigned prec);

}  // namespace mono
