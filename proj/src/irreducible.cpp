// Irreducibility over Q at desk-scale degrees: rational root test, then
// candidate factors reconstructed from complex-root subsets with coefficient
// rounding; every candidate is confirmed by exact division, so the numeric
// step only ever proposes.

#include <algorithm>

#include "mono/polynomial.hpp"
#include "mono/roots.hpp"

namespace mono {

static std::vector<Int> positive_divisors(const Int& n)
{
    Int a = abs_int(n);
    std::vector<Int> small, large;
    for (Int d(1); d * d <= a; d++) {
        if (mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

static std::optional<Polynomial> rational_root_factor(const Polynomial& f)
{
    // roots p/q with p | a_n, q | a_0
    Int an = f.coeff(0).get_num();
    Int a0 = f.lc().get_num();
    if (an == 0) return Polynomial{1, 0};  // root at 0
    for (const Int& p : positive_divisors(an))
        for (const Int& q : positive_divisors(a0))
            for (int sg : {1, -1}) {
                Rat r(sg * p, q);
                r.canonicalize();
                if (f.eval(r) == 0) {
                    std::vector<Rat> lin{Rat(r.get_den()), Rat(-r.get_num())};
                    return Polynomial(std::move(lin));
                }
            }
    return std::nullopt;
}

std::optional<Polynomial> find_factor(const Polynomial& f)
{
    if (f.is_zero() || f.degree() < 1) throw Error("irreducibility needs degree >= 1");
    if (f.degree() > 8) throw Error("unsupported degree");
    if (!f.is_integral()) throw Error("irreducibility needs integer coefficients");
    if (content_and_primitive(f).first != 1)
        throw Error("irreducibility needs a primitive polynomial");
    int n = f.degree();
    if (n == 1) return std::nullopt;

    if (auto lin = rational_root_factor(f)) return lin;
    if (n <= 3) return std::nullopt;

    // repeated factors
    Polynomial g = poly_gcd(f, f.derivative());
    if (g.degree() > 0) {
        Int den(1);
        for (const Rat& c : g.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        return content_and_primitive(g.scaled(Rat(den))).second;
    }

    const unsigned prec = 256;
    auto roots = canonical_roots(f, prec);
    auto divisors = positive_divisors(f.lc().get_num());

    // subsets of size 2 .. n/2 (linear factors already excluded)
    for (int k = 2; k <= n / 2; k++) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; i++) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            // monic product over the subset
            std::vector<MpComplex> c(static_cast<std::size_t>(k) + 1, MpComplex::zero(prec));
            c[0].re = 1;
            int used = 0;
            for (int i : idx) {
                const MpComplex& r = roots[static_cast<std::size_t>(i)];
                for (int j = used; j >= 0; j--) {
                    MpComplex t = c[static_cast<std::size_t>(j)] * r;
                    c[static_cast<std::size_t>(j) + 1] = c[static_cast<std::size_t>(j) + 1] - t;
                }
                used++;
            }
            for (const Int& dv : divisors) {
                std::vector<Rat> cand(static_cast<std::size_t>(k) + 1);
                bool ok = true;
                for (int j = 0; j <= k && ok; j++) {
                    mpf_class re = c[static_cast<std::size_t>(j)].re * mpf_class(dv, prec);
                    mpf_class im = c[static_cast<std::size_t>(j)].im * mpf_class(dv, prec);
                    if (abs(im) > 0.25) {
                        ok = false;
                        break;
                    }
                    mpf_class rr(0, prec);
                    mpf_floor(rr.get_mpf_t(), mpf_class(re + 0.5, prec).get_mpf_t());
                    if (abs(re - rr) > 0.25) {
                        ok = false;
                        break;
                    }
                    cand[static_cast<std::size_t>(j)] = Rat(Int(rr));
                }
                if (!ok) continue;
                Polynomial candidate(std::move(cand));
                if (candidate.degree() != k) continue;
                if (auto q = Polynomial::divide_exact(f, candidate)) {
                    (void)q;
                    return content_and_primitive(candidate).second;
                }
            }
            // next combination
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) i--;
            if (i < 0) break;
            idx[static_cast<std::size_t>(i)]++;
            for (int j = i + 1; j < k; j++)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace mono
