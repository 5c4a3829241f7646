#pragma once

#include "mono/equiv.hpp"
#include "mono/thue.hpp"

namespace mono {

// Quartic double-monogenization family: f = (X^2 - r)^2 - X - s. When f is
// irreducible, alpha = theta and beta = alpha^2 - r satisfy alpha = beta^2 - s,
// Z[alpha] = Z[beta], and the pair is GL2(Q)-inequivalent.
struct ThmCReport {
    Int r, s;
    Polynomial f;
    bool irreducible;
    std::optional<Polynomial> factor;  // on rejection
    bool alpha_from_beta;              // alpha = beta^2 - s
    bool equal_rings;                  // Z[alpha] = Z[beta]
    bool gl2q_inequivalent;
    int monogenizations;  // classify count on {alpha, beta}
    bool verified() const
    {
        return irreducible && alpha_from_beta && equal_rings && gl2q_inequivalent &&
               monogenizations >= 2;
    }
};
ThmCReport theorem_c(const Int& r, const Int& s);

struct ThmCScan {
    long range;
    std::vector<ThmCReport> cells;  // row-major over r, s in [-range, range]
    int verified_count;
    int rejected_count;
};
ThmCScan thmc_scan(long range, int jobs = 0);

// A hit that lifts to a monic generator in the GL2(Z)-orbit of xi = q alpha/p:
// (x, y) = (p d, -q c) with gcd(c, d) = 1, completed to U in GL2(Z) and
// verified exactly.
struct MonogenicWitness {
    ThueHit hit;
    Mobius u;
    FieldElement beta;
    Polynomial f_beta;
};

struct ScaledOrderReport {
    Polynomial f;
    Int p, q;
    Polynomial f_xi;    // primitive clearing of q^n f(pX/q)
    Int content_f_xi;   // always 1 under the preconditions
    Rat disc_f;
    Rat disc_xi;
    bool disc_identity;  // disc_xi = (pq)^{n(n-1)} disc_f
    long box_bound;
    std::vector<ThueHit> hits;             // F_f(x, y) = +-1 in the box
    std::vector<ThueHit> compatible_hits;  // (p d, -q c) shaped with gcd(c,d) = 1
    std::vector<MonogenicWitness> witnesses;
    // the box search is bounded evidence only: the Thue bound is ineffective,
    // so an empty hit list never proves non-monogenicity
    std::string evidence_label;
};
ScaledOrderReport scaled_order(const Polynomial& f, const Int& p, const Int& q, long box_bound,
                               int jobs = 0);

struct ReciprocalUnitReport {
    Polynomial f;
    bool equal_rings;     // Z[eps] = Z[eps^-1]
    bool z_inequivalent;  // eps, eps^-1 not Z-equivalent
    std::optional<Mobius> gl2z_witness;
    bool verified() const
    {
        return equal_rings && z_inequivalent && gl2z_witness.has_value();
    }
};
// f monic irreducible with constant term +-1, deg >= 3: eps = theta is a unit.
ReciprocalUnitReport reciprocal_unit_pair(const Polynomial& f);

}  // namespace mono
