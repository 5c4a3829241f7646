#include "mono/roots.hpp"

#include <algorithm>
#include <complex>

namespace mono {

static std::vector<Polynomial> sturm_chain(const Polynomial& f)
{
    std::vector<Polynomial> chain{f, f.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        Polynomial r = Polynomial::divrem(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

static int sign_changes_at(const std::vector<Polynomial>& chain, const Rat& x)
{
    int changes = 0, last = 0;
    for (const Polynomial& p : chain) {
        Rat v = p.eval(x);
        int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
        if (s == 0) continue;
        if (last != 0 && s != last) changes++;
        last = s;
    }
    return changes;
}

static int sign_changes_at_infinity(const std::vector<Polynomial>& chain, int dir)
{
    int changes = 0, last = 0;
    for (const Polynomial& p : chain) {
        if (p.is_zero()) continue;
        int s = p.lc() > 0 ? 1 : -1;
        if (dir < 0 && (p.degree() & 1)) s = -s;
        if (last != 0 && s != last) changes++;
        last = s;
    }
    return changes;
}

int count_real_roots(const Polynomial& f)
{
    if (f.is_zero()) throw Error("real roots of zero polynomial");
    if (f.degree() == 0) return 0;
    auto chain = sturm_chain(f);
    return sign_changes_at_infinity(chain, -1) - sign_changes_at_infinity(chain, +1);
}

// Cauchy bound: all roots have |z| < 1 + max |a_i / a_0|.
static Rat root_bound(const Polynomial& f)
{
    Rat m(0);
    for (const Rat& c : f.coeffs()) {
        Rat a = abs(c / f.lc());
        if (a > m) m = a;
    }
    return m + 1;
}

// Isolating intervals (lo, hi] for every real root, ascending.
static std::vector<std::pair<Rat, Rat>> isolate_real_roots(const Polynomial& f)
{
    auto chain = sturm_chain(f);
    Rat b = root_bound(f);
    auto count_in = [&](const Rat& lo, const Rat& hi) {
        return sign_changes_at(chain, lo) - sign_changes_at(chain, hi);
    };
    std::vector<std::pair<Rat, Rat>> work{{-b, b}}, done;
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        int c = count_in(lo, hi);
        if (c == 0) continue;
        if (c == 1) {
            done.emplace_back(lo, hi);
            continue;
        }
        Rat mid = (lo + hi) / 2;
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
    }
    std::sort(done.begin(), done.end(),
              [](const auto& a, const auto& b2) { return a.first < b2.first; });
    return done;
}

// Shrink an isolating interval by exact bisection until its width is below
// 2^-(prec+8). Signs are evaluated exactly, so this is deterministic.
static Rat refine_real_root(const Polynomial& f, Rat lo, Rat hi, unsigned prec)
{
    Rat flo = f.eval(lo);
    if (flo == 0) return lo;
    if (f.eval(hi) == 0) return hi;
    int slo = flo > 0 ? 1 : -1;
    Rat width = hi - lo;
    Rat target(Int(1), Int(1));
    {
        Int den(1);
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), prec + 8);
        target = Rat(Int(1)) / Rat(den);
    }
    while (width > target) {
        Rat mid = (lo + hi) / 2;
        Rat fm = f.eval(mid);
        if (fm == 0) return mid;
        if ((fm > 0 ? 1 : -1) == slo)
            lo = mid;
        else
            hi = mid;
        width = hi - lo;
    }
    return (lo + hi) / 2;
}

MpComplex eval_complex(const Polynomial& f, const MpComplex& z, unsigned prec)
{
    MpComplex acc = MpComplex::zero(prec);
    for (const Rat& c : f.coeffs()) {
        acc = acc * z;
        acc.re += mpf_class(c, prec);
    }
    return acc;
}

// Aberth-Ehrlich simultaneous iteration in double precision; good enough as
// a seed for Newton refinement at full precision.
static std::vector<std::complex<double>> aberth_double(const Polynomial& f)
{
    int n = f.degree();
    std::vector<std::complex<double>> a(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; k++) a[static_cast<std::size_t>(k)] = f.coeff(n - k).get_d();
    auto eval = [&](std::complex<double> z, std::complex<double>& d) {
        std::complex<double> v = a[0];
        d = 0;
        for (int k = 1; k <= n; k++) {
            d = d * z + v;
            v = v * z + a[static_cast<std::size_t>(k)];
        }
        return v;
    };
    double r = root_bound(f).get_d();
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; i++) {
        double ang = 2 * 3.14159265358979323846 * i / n + 0.4;
        z[static_cast<std::size_t>(i)] = std::polar(r * (0.5 + 0.3 * ((i % 3) + 1) / 3.0), ang);
    }
    for (int iter = 0; iter < 600; iter++) {
        double worst = 0;
        for (int i = 0; i < n; i++) {
            std::complex<double> d;
            std::complex<double> v = eval(z[static_cast<std::size_t>(i)], d);
            if (std::abs(v) == 0.0) continue;
            std::complex<double> w = d == 0.0 ? std::complex<double>(0) : v / d;
            std::complex<double> s = 0;
            for (int j = 0; j < n; j++)
                if (j != i) s += 1.0 / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
            std::complex<double> den = 1.0 - w * s;
            std::complex<double> step = den == 0.0 ? w : w / den;
            z[static_cast<std::size_t>(i)] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

static MpComplex newton_refine(const Polynomial& f, const Polynomial& fd, MpComplex z,
                               unsigned prec)
{
    mpf_class tol(1, prec);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec);
    for (int iter = 0; iter < 200; iter++) {
        MpComplex v = eval_complex(f, z, prec);
        MpComplex d = eval_complex(fd, z, prec);
        if (d.norm() == 0) break;
        MpComplex step = v / d;
        z = z - step;
        mpf_class sz = step.abs();
        mpf_class scale = z.abs();
        if (scale < 1) scale = 1;
        if (sz < tol * scale) break;
    }
    return z;
}

std::vector<MpComplex> canonical_roots(const Polynomial& f, unsigned prec)
{
    if (f.is_zero() || f.degree() < 1) throw Error("roots of a constant");
    int n = f.degree();
    int nreal = count_real_roots(f);
    int npairs = (n - nreal) / 2;
    if (nreal + 2 * npairs != n) throw Error("polynomial not squarefree");

    std::vector<MpComplex> roots;
    roots.reserve(static_cast<std::size_t>(n));
    for (auto& iv : isolate_real_roots(f)) {
        Rat x = refine_real_root(f, iv.first, iv.second, prec);
        roots.emplace_back(mpf_class(x, prec), mpf_class(0, prec));
    }

    if (npairs > 0) {
        auto seeds = aberth_double(f);
        // keep the representatives with positive imaginary part, largest first
        std::sort(seeds.begin(), seeds.end(),
                  [](const std::complex<double>& a, const std::complex<double>& b) {
                      return a.imag() > b.imag();
                  });
        Polynomial fd = f.derivative();
        std::vector<MpComplex> reps;
        for (int i = 0; i < npairs; i++) {
            MpComplex z(mpf_class(seeds[static_cast<std::size_t>(i)].real(), prec),
                        mpf_class(seeds[static_cast<std::size_t>(i)].imag(), prec));
            z = newton_refine(f, fd, z, prec);
            if (z.im <= 0) throw Error("raise precision");
            reps.push_back(z);
        }
        for (auto& z : reps) {
            roots.push_back(z);
            roots.push_back(z.conj());
        }
    }

    std::sort(roots.begin(), roots.end(), [](const MpComplex& a, const MpComplex& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    });

    // separation must dominate the residual, else the ordering is unreliable
    mpf_class res = roots_residual_bound(f, roots, prec);
    mpf_class minsep(0, prec);
    bool first = true;
    for (std::size_t i = 0; i < roots.size(); i++)
        for (std::size_t j = i + 1; j < roots.size(); j++) {
            mpf_class d = (roots[i] - roots[j]).abs();
            if (first || d < minsep) {
                minsep = d;
                first = false;
            }
        }
    if (!first && minsep <= 10 * res) throw Error("raise precision");
    return roots;
}

mpf_class roots_residual_bound(const Polynomial& f, const std::vector<MpComplex>& roots,
                               unsigned prec)
{
    Polynomial fd = f.derivative();
    mpf_class worst(0, prec);
    for (const MpComplex& z : roots) {
        mpf_class v = eval_complex(f, z, prec).abs();
        mpf_class d = eval_complex(fd, z, prec).abs();
        if (d == 0) return mpf_class(1, prec);
        mpf_class q = v / d;
        if (q > worst) worst = q;
    }
    return worst;
}

std::optional<Rat> rationalize(const mpf_class& x, unsigned prec)
{
    // continued fractions on x until the convergent is within 2^-(prec/2)
    Int den_cap(1);
    mpz_mul_2exp(den_cap.get_mpz_t(), den_cap.get_mpz_t(), prec / 4);
    mpf_class eps(1, prec);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec / 2);

    mpf_class v(x, prec);
    Int p0(1), q0(0), p1, q1;
    {
        mpf_class fl;
        mpf_floor(fl.get_mpf_t(), v.get_mpf_t());
        Int a(fl);
        p1 = a;
        q1 = 1;
        v -= fl;
    }
    for (int it = 0; it < 200; it++) {
        mpf_class approx = mpf_class(p1, prec) / mpf_class(q1, prec);
        mpf_class diff = abs(mpf_class(x - approx, prec));
        if (diff < eps) {
            Rat r{p1, q1};
            r.canonicalize();
            return r;
        }
        if (v == 0) break;
        v = 1 / v;
        mpf_class fl;
        mpf_floor(fl.get_mpf_t(), v.get_mpf_t());
        Int a(fl);
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if (q1 > den_cap) break;
        v -= fl;
    }
    return std::nullopt;
}

}  // namespace mono
