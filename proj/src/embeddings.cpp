#include "mono/embeddings.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mono {

EmbeddingSet::EmbeddingSet(const NumberField& K, unsigned prec) : field_(K), prec_(prec)
{
    if (prec < 53) throw Error("precision must be at least 53 bits");
    roots_ = canonical_roots(K.defining_poly(), prec);
    residual_ = roots_residual_bound(K.defining_poly(), roots_, prec);
}

MpComplex EmbeddingSet::embed(const FieldElement& xi, int i) const
{
    if (!xi.field().same_field(field_)) throw Error("element of a different field");
    const MpComplex& z = roots_.at(static_cast<std::size_t>(i));
    MpComplex acc = MpComplex::zero(prec_);
    MpComplex pw(mpf_class(1, prec_), mpf_class(0, prec_));
    for (const Rat& c : xi.coords()) {
        acc = acc + MpComplex(mpf_class(c, prec_), mpf_class(0, prec_)) * pw;
        pw = pw * z;
    }
    return acc;
}

std::vector<MpComplex> EmbeddingSet::embed_all(const FieldElement& xi) const
{
    std::vector<MpComplex> v;
    v.reserve(roots_.size());
    for (int i = 0; i < count(); i++) v.push_back(embed(xi, i));
    return v;
}

static MpComplex cross_ratio_of(const std::vector<MpComplex>& a, const std::array<int, 4>& t)
{
    const MpComplex &ai = a[static_cast<std::size_t>(t[0])], &aj = a[static_cast<std::size_t>(t[1])],
                    &ak = a[static_cast<std::size_t>(t[2])], &al = a[static_cast<std::size_t>(t[3])];
    return ((ai - aj) * (ak - al)) / ((ai - ak) * (aj - al));
}

MpComplex cross_ratio(const FieldElement& alpha, const std::array<int, 4>& t,
                      const EmbeddingSet& E)
{
    int n = E.count();
    if (n < 4) throw Error("cross ratio needs degree >= 4");
    for (int i = 0; i < 4; i++)
        for (int j = i + 1; j < 4; j++)
            if (t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(j)])
                throw Error("cross ratio indices must be pairwise distinct");
    for (int x : t)
        if (x < 0 || x >= n) throw Error("cross ratio index out of range");
    auto vals = E.embed_all(alpha);
    // conjugates of a generator are pairwise distinct; guard the denominator
    MpComplex den = (vals[static_cast<std::size_t>(t[0])] - vals[static_cast<std::size_t>(t[2])]) *
                    (vals[static_cast<std::size_t>(t[1])] - vals[static_cast<std::size_t>(t[3])]);
    if (den.norm() == 0) throw Error("coincident conjugates; raise precision");
    return cross_ratio_of(vals, t);
}

const MpComplex& EpsilonTable::at(int i, int j, int k, int l) const
{
    // tuples are lexicographic over pairwise-distinct indices
    for (std::size_t idx = 0; idx < tuples.size(); idx++) {
        const auto& t = tuples[idx];
        if (t[0] == i && t[1] == j && t[2] == k && t[3] == l) return eps[idx];
    }
    throw Error("tuple not in table");
}

EpsilonTable epsilon_table(const FieldElement& alpha, const FieldElement& beta,
                           const EmbeddingSet& E)
{
    if (!is_generator(alpha) || !is_generator(beta)) throw Error("inputs must generate the field");
    int n = E.count();
    if (n < 4) throw Error("epsilon table needs degree >= 4");
    EpsilonTable T{E.field(), n, E.precision(), {}, {}, {}, {}};
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            for (int k = 0; k < n; k++)
                for (int l = 0; l < n; l++) {
                    if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
                    T.tuples.push_back({i, j, k, l});
                }
    auto va = E.embed_all(alpha);
    auto vb = E.embed_all(beta);
    std::size_t m = T.tuples.size();
    T.eps.assign(m, MpComplex::zero(E.precision()));
    T.cr_alpha.assign(m, MpComplex::zero(E.precision()));
    T.cr_beta.assign(m, MpComplex::zero(E.precision()));
    bool zero_ratio = false;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::size_t idx = 0; idx < m; idx++) {
        MpComplex ca = cross_ratio_of(va, T.tuples[idx]);
        MpComplex cb = cross_ratio_of(vb, T.tuples[idx]);
        if (ca.norm() == 0 || cb.norm() == 0) {
            zero_ratio = true;
            continue;
        }
        T.cr_alpha[idx] = ca;
        T.cr_beta[idx] = cb;
        T.eps[idx] = cb / ca;
    }
    if (zero_ratio) throw Error("zero cross ratio");
    return T;
}

static double dist(const MpComplex& a, const MpComplex& b)
{
    return mpf_class((a - b).abs()).get_d();
}

IdentityReport check_identities(const EpsilonTable& T, double tol)
{
    IdentityReport rep;
    int n = T.n;
    MpComplex one(mpf_class(1, T.prec), mpf_class(0, T.prec));

    // index helper over the lexicographic tuple list
    auto eps = [&](int i, int j, int k, int l) -> const MpComplex& { return T.at(i, j, k, l); };

    {  // sum1 on both alpha and beta cross ratios
        IdentityReport::Family f{"sum1", true, false, 0.0, {}};
        for (std::size_t idx = 0; idx < T.tuples.size(); idx++) {
            auto [i, j, k, l] = T.tuples[idx];
            for (const auto* side : {&T.cr_alpha, &T.cr_beta}) {
                const MpComplex& a = (*side)[idx];
                // find cr_ilkj on the same side
                std::size_t other = 0;
                for (; other < T.tuples.size(); other++) {
                    const auto& t = T.tuples[other];
                    if (t[0] == i && t[1] == l && t[2] == k && t[3] == j) break;
                }
                double v = dist(a + (*side)[other], one);
                f.max_violation = std::max(f.max_violation, v);
            }
        }
        rep.families.push_back(f);
    }

    {  // symmetry family (3.5)
        IdentityReport::Family f{"symmetry", true, false, 0.0, {}};
        for (const auto& t : T.tuples) {
            auto [i, j, k, l] = t;
            const MpComplex& e = eps(i, j, k, l);
            f.max_violation = std::max(f.max_violation, dist(e, eps(j, i, l, k)));
            f.max_violation = std::max(f.max_violation, dist(e, eps(k, l, i, j)));
            f.max_violation = std::max(f.max_violation, dist(e, eps(l, k, j, i)));
            f.max_violation = std::max(f.max_violation, dist(one / e, eps(i, k, j, l)));
            f.max_violation =
                std::max(f.max_violation, dist(e / eps(i, j, l, k), eps(i, l, k, j)));
        }
        rep.families.push_back(f);
    }

    {  // cramer (3.4)
        IdentityReport::Family f{"cramer", true, false, 0.0, {}};
        mpf_class tolf(tol, T.prec);
        std::size_t used = 0;
        for (std::size_t idx = 0; idx < T.tuples.size(); idx++) {
            auto [i, j, k, l] = T.tuples[idx];
            const MpComplex& e = eps(i, j, k, l);
            const MpComplex& e2 = eps(i, l, k, j);
            MpComplex den = e2 - e;
            if (den.abs() < tolf) continue;
            used++;
            MpComplex rhs = (e2 - one) / den;
            f.max_violation = std::max(f.max_violation, dist(T.cr_alpha[idx], rhs));
        }
        if (used == 0) {
            f.skipped = true;
            f.note = "skipped: degenerate denominators";
        }
        rep.families.push_back(f);
    }

    {  // fifth-index quotient (3.6)
        IdentityReport::Family f{"fifth", n >= 5, false, 0.0, {}};
        if (n < 5)
            f.note = "not applicable: n < 5";
        else
            for (int i = 0; i < n; i++)
                for (int j = 0; j < n; j++)
                    for (int k = 0; k < n; k++)
                        for (int l = 0; l < n; l++)
                            for (int m2 = 0; m2 < n; m2++) {
                                int v[5] = {i, j, k, l, m2};
                                bool dup = false;
                                for (int x = 0; x < 5; x++)
                                    for (int y = x + 1; y < 5; y++)
                                        if (v[x] == v[y]) dup = true;
                                if (dup) continue;
                                f.max_violation = std::max(
                                    f.max_violation,
                                    dist(eps(i, j, k, l) / eps(i, j, k, m2), eps(j, m2, l, k)));
                            }
        rep.families.push_back(f);
    }

    {  // six-factor identity (3.8) at (i,j,k,l,m) = (5,1,2,3,4), 0-based (4,0,1,2,3)
        IdentityReport::Family f{"sixfold", n >= 5, false, 0.0, {}};
        if (n < 5)
            f.note = "not applicable: n < 5";
        else {
            MpComplex lhs = (eps(0, 1, 2, 3) - one) * (eps(0, 1, 3, 4) - one) *
                            (eps(0, 1, 4, 2) - one);
            MpComplex rhs = (eps(0, 1, 3, 2) - one) * (eps(0, 1, 4, 3) - one) *
                            (eps(0, 1, 2, 4) - one);
            f.max_violation = dist(lhs, rhs);
        }
        rep.families.push_back(f);
    }
    return rep;
}

bool IdentityReport::all_pass(double tol) const
{
    for (const auto& f : families)
        if (f.applicable && !f.skipped && f.max_violation >= tol) return false;
    return true;
}

UnitCertificate unit_certificate(const EpsilonTable& T, double tol)
{
    unsigned prec = T.prec;
    // expand P(X) = prod (X - eps) with exact complex coefficients
    std::vector<MpComplex> c{MpComplex(mpf_class(1, prec), mpf_class(0, prec))};
    for (const MpComplex& e : T.eps) {
        c.push_back(MpComplex::zero(prec));
        for (std::size_t j = c.size() - 1; j > 0; j--)
            c[j] = c[j] - e * c[j - 1];
    }
    double maxdist = 0;
    for (const MpComplex& coeff : c) {
        mpf_class nearest(0, prec);
        mpf_class half(coeff.re + 0.5, prec);
        mpf_floor(nearest.get_mpf_t(), half.get_mpf_t());
        double d = mpf_class(abs(coeff.re - nearest) + abs(coeff.im)).get_d();
        maxdist = std::max(maxdist, d);
    }
    const MpComplex& constant = c.back();
    double dplus = dist(constant, MpComplex(mpf_class(1, prec), mpf_class(0, prec)));
    double dminus = dist(constant, MpComplex(mpf_class(-1, prec), mpf_class(0, prec)));
    double dconst = std::min(dplus, dminus);
    bool pass = maxdist < tol && dconst < tol;
    return {pass, maxdist, dconst, static_cast<int>(T.eps.size())};
}

}  // namespace mono
