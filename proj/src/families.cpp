#include "mono/families.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mono {

ThmCReport theorem_c(const Int& r, const Int& s)
{
    // f = (X^2 - r)^2 - X - s
    Polynomial x2r = Polynomial{1, 0} * Polynomial{1, 0} - Polynomial::constant(Rat(r));
    Polynomial f = x2r * x2r - Polynomial{1, 0} - Polynomial::constant(Rat(s));
    ThmCReport rep{r, s, f, false, std::nullopt, false, false, false, 0};
    if (auto fac = find_factor(f)) {
        rep.factor = fac;
        return rep;
    }
    rep.irreducible = true;
    NumberField K(f);
    FieldElement alpha = K.theta();
    FieldElement beta = alpha * alpha - K.from_rational(Rat(r));
    rep.alpha_from_beta = (beta * beta - K.from_rational(Rat(s))) == alpha;
    auto base = BaseRing::integers();
    rep.equal_rings =
        FullModule::power_module(alpha, base) == FullModule::power_module(beta, base);
    rep.gl2q_inequivalent = !gl2q_equivalent(alpha, beta).has_value();
    auto cls = classify({alpha, beta}, base);
    rep.monogenizations = cls.monogenization_count();
    return rep;
}

ThmCScan thmc_scan(long range, int jobs)
{
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#else
    (void)jobs;
#endif
    long side = 2 * range + 1;
    long total = side * side;
    ThmCScan scan{range, {}, 0, 0};
    scan.cells.resize(static_cast<std::size_t>(total),
                      ThmCReport{Int(0), Int(0), Polynomial(), false, std::nullopt, false, false,
                                 false, 0});
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long idx = 0; idx < total; idx++) {
        long r = idx / side - range;
        long s = idx % side - range;
        scan.cells[static_cast<std::size_t>(idx)] = theorem_c(Int(r), Int(s));
    }
    for (const auto& c : scan.cells)
        c.verified() ? scan.verified_count++ : scan.rejected_count++;
    return scan;
}

ScaledOrderReport scaled_order(const Polynomial& f, const Int& p, const Int& q, long box_bound,
                               int jobs)
{
    if (f.is_zero() || f.degree() < 3) throw Error("f must have degree >= 3");
    if (!f.is_integral() || content_and_primitive(f).first != 1 || f.lc() < 0)
        throw Error("f must be primitive-integral with positive leading coefficient");
    if (!is_prime(p) || !is_prime(q)) throw Error("p and q must be prime");
    if (p == q) throw Error("p = q");
    int n = f.degree();
    Int a0 = f.lc().get_num(), an = f.coeff(0).get_num();
    Int m = abs_int(a0) > abs_int(an) ? abs_int(a0) : abs_int(an);
    if (p <= m || q <= m) throw Error("p, q must exceed max(|a_0|, |a_n|)");
    if (auto fac = find_factor(f)) throw Error("f is reducible", fac->str());

    ScaledOrderReport rep{f,       p,     q, Polynomial(), Int(0), Rat(0), Rat(0), false,
                          box_bound, {},    {}, {},           {}};

    // f_xi = primitive clearing of q^n f(pX/q)
    Polynomial scaled = f.compose_scale(Rat(p) / Rat(q));
    Int qn(1);
    for (int i = 0; i < n; i++) qn *= q;
    auto [cont, prim] = content_and_primitive(scaled.scaled(Rat(qn)));
    rep.f_xi = prim;
    rep.content_f_xi = cont;

    rep.disc_f = poly_discriminant(f);
    rep.disc_xi = poly_discriminant(rep.f_xi);
    Rat pq(p * q);
    Rat factor(1);
    for (int i = 0; i < n * (n - 1); i++) factor *= pq;
    rep.disc_identity = rep.disc_xi == factor * rep.disc_f;

    // cross-check through the order machinery: Z_xi for xi = q theta / p
    NumberField K(f);
    FieldElement xi = K.theta().scaled(Rat(q) / Rat(p));
    auto O = order_omega_basis(xi, BaseRing::integers());
    if (O.discriminant() != rep.disc_xi) throw Error("order/polynomial discriminant mismatch");

    // box search on the homogenization of f
    BinaryForm F = BinaryForm::homogenize(f);
    rep.hits = thue_scan(F, box_bound, jobs);
    for (const ThueHit& h : rep.hits) {
        if (h.x % p != 0 || h.y % q != 0) continue;
        Int d = Int(h.x) / p;
        Int c = -(Int(h.y) / q);
        Int g;
        mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        if (g != 1) continue;
        rep.compatible_hits.push_back(h);
        // complete (c, d) to U in GL2(Z): a d - b c = 1
        Int u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
        // u d + v c = 1  =>  take a = u, b = -v
        Mobius U(Rat(u), Rat(-v), Rat(c), Rat(d));
        FieldElement beta = mobius_apply_element(U, xi);
        Polynomial fb = primitive_min_poly(beta);
        if (fb.lc() != 1) continue;  // not monic after all (sign conventions)
        // exact confirmation: Z[beta] = Z_xi
        auto Ob = FullModule::power_module(beta, BaseRing::integers());
        if (!(Ob == O.module())) continue;
        rep.witnesses.push_back({h, U, beta, fb});
    }
    rep.evidence_label =
        "bounded box search; empty results are heuristic evidence only (no effective Thue bound)";
    return rep;
}

ReciprocalUnitReport reciprocal_unit_pair(const Polynomial& f)
{
    if (f.is_zero() || f.degree() < 3) throw Error("f must have degree >= 3");
    if (!f.is_integral() || f.lc() != 1) throw Error("f must be monic");
    if (abs(f.coeff(0)) != 1) throw Error("not a unit");
    if (auto fac = find_factor(f)) throw Error("f is reducible", fac->str());

    NumberField K(f);
    FieldElement eps = K.theta();
    FieldElement inv = eps.inverse();
    ReciprocalUnitReport rep{f, false, false, std::nullopt};
    auto base = BaseRing::integers();
    rep.equal_rings = FullModule::power_module(eps, base) == FullModule::power_module(inv, base);
    rep.z_inequivalent = !z_equivalent(eps, inv);
    rep.gl2z_witness = gl2a_equivalent(eps, inv, base);
    return rep;
}

}  // namespace mono
