#include "mono/module.hpp"

#include <algorithm>
#include <sstream>

#include "mono/linalg.hpp"

namespace mono {

BaseRing BaseRing::s_integers(std::vector<Int> primes)
{
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (const Int& p : primes)
        if (!is_prime(p)) throw Error("S must consist of primes, got " + p.get_str());
    return {std::move(primes)};
}

bool BaseRing::is_unit(const Int& x) const
{
    if (x == 0) return false;
    return abs_int(s_free_part(x, S)) == 1;
}

std::string BaseRing::str() const
{
    if (is_z()) return "Z";
    std::string s = "Z_S, S={";
    for (std::size_t i = 0; i < S.size(); i++) {
        if (i) s += ",";
        s += S[i].get_str();
    }
    return s + "}";
}

FullModule::FullModule(NumberField K, BaseRing base, Int denom, IntMat basis_rows)
    : field_(std::move(K)), base_(std::move(base)), denom_(std::move(denom)),
      basis_(std::move(basis_rows))
{
    if (denom_ <= 0) throw Error("denominator must be positive");
    if (basis_.rows != field_.degree() || basis_.cols != field_.degree())
        throw Error("basis must be n x n");
    canonicalize();
}

// integer lattice of x in Z^n with x/scale in the row span of m/scale, i.e.
// saturation helper: ((1/k) L) cap Z^n = (1/k)(L cap k Z^n)
static IntMat lattice_div_cap_int(const IntMat& l, const Int& k)
{
    int n = l.cols;
    IntMat kz(n, n);
    for (int i = 0; i < n; i++) kz.at(i, i) = k;
    IntMat cap = lattice_intersect(l, kz);
    IntMat out(n, n);
    for (int r = 0; r < n; r++)
        for (int c = 0; c < n; c++) {
            Int q;
            mpz_divexact(q.get_mpz_t(), cap.at(r, c).get_mpz_t(), k.get_mpz_t());
            out.at(r, c) = q;
        }
    return hnf_full_rank(out);
}

void FullModule::canonicalize()
{
    basis_ = hnf_full_rank(basis_);
    // minimal denominator: divide out gcd(denom, all entries)
    Int g = denom_;
    for (const Int& v : basis_.a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1) {
        for (Int& v : basis_.a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(denom_.get_mpz_t(), denom_.get_mpz_t(), g.get_mpz_t());
    }
    if (base_.is_z()) return;

    // Z_S: scale the module by the S-part of the denominator (an S-unit),
    // then saturate the lattice at every p in S, then reduce again.
    Int sfree = s_free_part(denom_, base_.S);
    denom_ = sfree;  // multiplies the module by the S-part, a unit
    for (const Int& p : base_.S) {
        while (true) {
            IntMat bigger = lattice_div_cap_int(basis_, p);
            if (bigger == basis_) break;
            basis_ = bigger;
        }
    }
    Int g2 = denom_;
    for (const Int& v : basis_.a) mpz_gcd(g2.get_mpz_t(), g2.get_mpz_t(), v.get_mpz_t());
    if (g2 > 1) {
        for (Int& v : basis_.a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g2.get_mpz_t());
        mpz_divexact(denom_.get_mpz_t(), denom_.get_mpz_t(), g2.get_mpz_t());
    }
}

FullModule FullModule::from_generators(const std::vector<FieldElement>& gens, const BaseRing& base)
{
    if (gens.empty()) throw Error("no generators");
    const NumberField& K = gens.front().field();
    int n = K.degree();
    Int den(1);
    for (const FieldElement& g : gens) {
        if (!g.field().same_field(K)) throw Error("generators from different fields");
        for (const Rat& q : g.coords()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    IntMat rows(static_cast<int>(gens.size()), n);
    for (int r = 0; r < static_cast<int>(gens.size()); r++) {
        const auto& c = gens[static_cast<std::size_t>(r)].coords();
        for (int j = 0; j < n; j++) {
            Rat v = c[static_cast<std::size_t>(j)] * Rat(den);
            rows.at(r, j) = v.get_num();  // exact by construction
        }
    }
    IntMat h = hnf(rows);
    if (h.rows != n) throw Error("generators do not span the field over Q");
    return FullModule(K, base, den, h);
}

FullModule FullModule::power_module(const FieldElement& xi, const BaseRing& base)
{
    const NumberField& K = xi.field();
    std::vector<FieldElement> gens;
    FieldElement p = K.one();
    for (int i = 0; i < K.degree(); i++) {
        gens.push_back(p);
        p = p * xi;
    }
    return from_generators(gens, base);
}

std::vector<FieldElement> FullModule::basis_elements() const
{
    std::vector<FieldElement> v;
    for (int i = 0; i < rank(); i++) v.push_back(basis_element(i));
    return v;
}

FieldElement FullModule::basis_element(int i) const
{
    int n = field_.degree();
    std::vector<Rat> c(static_cast<std::size_t>(n));
    for (int j = 0; j < n; j++) {
        c[static_cast<std::size_t>(j)] = Rat(basis_.at(i, j)) / Rat(denom_);
    }
    return field_.from_coords(std::move(c));
}

bool FullModule::operator==(const FullModule& o) const
{
    return field_.same_field(o.field_) && base_.same(o.base_) && denom_ == o.denom_ &&
           basis_ == o.basis_;
}

bool FullModule::contains(const FieldElement& x) const
{
    // solve y * basis = denom * coords(x) over Q, require base-integrality
    int n = field_.degree();
    QMat m(n, n);
    for (int r = 0; r < n; r++)
        for (int c = 0; c < n; c++) m.at(r, c) = Rat(basis_.at(r, c));
    std::vector<Rat> rhs(static_cast<std::size_t>(n));
    for (int c = 0; c < n; c++) rhs[static_cast<std::size_t>(c)] = x.coords()[static_cast<std::size_t>(c)] * Rat(denom_);
    // y^T basis = rhs  <=>  basis^T y = rhs
    auto y = qmat_solve(m.transposed(), rhs);
    for (const Rat& q : y) {
        Int den = q.get_den();
        if (!base_.is_z()) den = s_free_part(den, base_.S);
        if (den != 1) return false;
    }
    return true;
}

bool FullModule::is_ring() const
{
    if (!contains(field_.one())) return false;
    int n = field_.degree();
    QMat b(n, n);
    for (int r = 0; r < n; r++)
        for (int c = 0; c < n; c++) b.at(r, c) = Rat(basis_.at(r, c));
    QMat binv = qmat_inverse(b);
    auto bas = basis_elements();
    for (int i = 0; i < n; i++)
        for (int j = i; j < n; j++) {
            FieldElement prod = bas[static_cast<std::size_t>(i)] * bas[static_cast<std::size_t>(j)];
            for (int c = 0; c < n; c++) {
                Rat y(0);
                for (int k = 0; k < n; k++)
                    y += prod.coords()[static_cast<std::size_t>(k)] * binv.at(k, c);
                y *= Rat(denom_);
                Int den = y.get_den();
                if (!base_.is_z()) den = s_free_part(den, base_.S);
                if (den != 1) return false;
            }
        }
    return true;
}

FullModule FullModule::intersect(const FullModule& o) const
{
    if (!field_.same_field(o.field_) || !base_.same(o.base_)) throw Error("module mismatch");
    // x = u A/da = v B/db  <=>  u (db A) = v (da B)
    int n = field_.degree();
    IntMat stacked(2 * n, n);
    for (int r = 0; r < n; r++)
        for (int c = 0; c < n; c++) {
            stacked.at(r, c) = o.denom_ * basis_.at(r, c);
            stacked.at(n + r, c) = -denom_ * o.basis_.at(r, c);
        }
    IntMat ker = left_kernel(stacked);
    IntMat gen(ker.rows, n);
    for (int r = 0; r < ker.rows; r++)
        for (int c = 0; c < n; c++) {
            Int s(0);
            for (int k = 0; k < n; k++) s += ker.at(r, k) * basis_.at(k, c);
            gen.at(r, c) = s;
        }
    return FullModule(field_, base_, denom_, hnf_full_rank(gen));
}

FullModule FullModule::sum(const FullModule& o) const
{
    if (!field_.same_field(o.field_) || !base_.same(o.base_)) throw Error("module mismatch");
    int n = field_.degree();
    Int l;
    mpz_lcm(l.get_mpz_t(), denom_.get_mpz_t(), o.denom_.get_mpz_t());
    IntMat rows(2 * n, n);
    Int fa = l / denom_, fb = l / o.denom_;
    for (int r = 0; r < n; r++)
        for (int c = 0; c < n; c++) {
            rows.at(r, c) = fa * basis_.at(r, c);
            rows.at(n + r, c) = fb * o.basis_.at(r, c);
        }
    return FullModule(field_, base_, l, hnf_full_rank(rows));
}

FullModule FullModule::scaled_by(const FieldElement& x) const
{
    if (x.is_zero()) throw Error("scaling a module by zero");
    std::vector<FieldElement> gens;
    for (const FieldElement& b : basis_elements()) gens.push_back(b * x);
    return from_generators(gens, base_);
}

FullModule FullModule::multiplier_ring() const
{
    // xi M <= M, xi = sum x_i theta^i: stack the n multiplication constraints
    // x G_j (d B^{-1}) in Z^n for each basis element g_j, then solve the
    // integer preimage lattice by a kernel computation.
    int n = field_.degree();
    QMat binv;  // denom * basis^{-1}
    {
        QMat b(n, n);
        for (int r = 0; r < n; r++)
            for (int c = 0; c < n; c++) b.at(r, c) = Rat(basis_.at(r, c));
        binv = qmat_inverse(b);
        for (auto& q : binv.a) q *= Rat(denom_);
    }
    auto bas = basis_elements();
    // W = [G_0 binv | ... | G_{n-1} binv], n x n^2 rational
    QMat W(n, n * n);
    for (int j = 0; j < n; j++) {
        // G_j: row i = coords(theta^i * g_j)
        QMat Gj(n, n);
        FieldElement tp = field_.one();
        for (int i = 0; i < n; i++) {
            FieldElement prod = tp * bas[static_cast<std::size_t>(j)];
            for (int c = 0; c < n; c++) Gj.at(i, c) = prod.coords()[static_cast<std::size_t>(c)];
            tp = tp * field_.theta();
        }
        QMat piece = Gj * binv;
        for (int r = 0; r < n; r++)
            for (int c = 0; c < n; c++) W.at(r, j * n + c) = piece.at(r, c);
    }
    // clear denominators: W = N / e
    Int e(1);
    for (const Rat& q : W.a) mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), q.get_den_mpz_t());
    IntMat N(n, n * n);
    for (int r = 0; r < n; r++)
        for (int c = 0; c < n * n; c++) {
            Rat v = W.at(r, c) * Rat(e);
            N.at(r, c) = v.get_num();
        }
    // common denominator bound for solutions: q = |det N0| for any
    // nonsingular n x n column submatrix; the first block G_0 binv works
    // since g_0 is invertible in K
    Int q;
    {
        IntMat n0(n, n);
        for (int r = 0; r < n; r++)
            for (int c = 0; c < n; c++) n0.at(r, c) = N.at(r, c);
        q = abs_int(intmat_det(n0));
        if (q == 0) throw Error("multiplier ring: degenerate block");
    }
    // integer lattice {w : w N = 0 mod e q}: kernel of [[N],[eq I]] projected
    Int eq = e * q;
    IntMat G(n + n * n, n * n);
    for (int r = 0; r < n; r++)
        for (int c = 0; c < n * n; c++) G.at(r, c) = N.at(r, c);
    for (int r = 0; r < n * n; r++) G.at(n + r, r) = eq;
    IntMat ker = left_kernel(G);
    IntMat proj(ker.rows, n);
    for (int r = 0; r < ker.rows; r++)
        for (int c = 0; c < n; c++) proj.at(r, c) = ker.at(r, c);
    IntMat h = hnf_full_rank(proj);
    return FullModule(field_, base_, q, h);
}

Rat FullModule::index_of(const FullModule& sub) const
{
    if (!field_.same_field(sub.field_) || !base_.same(sub.base_)) throw Error("module mismatch");
    for (const FieldElement& b : sub.basis_elements())
        if (!contains(b)) throw Error("not a submodule", b.str());
    Rat da = Rat(intmat_det(basis_)), db = Rat(intmat_det(sub.basis_));
    Rat ra(1), rb(1);
    int n = field_.degree();
    for (int i = 0; i < n; i++) {
        ra *= Rat(denom_);
        rb *= Rat(sub.denom_);
    }
    Rat idx = abs(db / rb) / abs(da / ra);
    if (!base_.is_z()) idx = s_free_part(idx, base_.S);
    return idx;
}

Rat FullModule::discriminant() const
{
    int n = field_.degree();
    auto bas = basis_elements();
    QMat t(n, n);
    for (int i = 0; i < n; i++)
        for (int j = i; j < n; j++) {
            Rat tr = (bas[static_cast<std::size_t>(i)] * bas[static_cast<std::size_t>(j)]).trace();
            t.at(i, j) = tr;
            t.at(j, i) = tr;
        }
    Rat d = qmat_det(t);
    if (!base_.is_z()) d = s_free_part(d, base_.S);
    return d;
}

IntMat FullModule::unit_first_basis() const
{
    int n = field_.degree();
    if (!contains(field_.one())) throw Error("module does not contain 1");
    // lower-triangular HNF: reverse the column order, row-HNF, undo the
    // reversal and flip the row order (all left-unimodular, same lattice)
    IntMat rev(n, n);
    for (int r = 0; r < n; r++)
        for (int c = 0; c < n; c++) rev.at(r, c) = basis_.at(r, n - 1 - c);
    IntMat h = hnf_full_rank(rev);
    IntMat out(n, n);
    for (int r = 0; r < n; r++)
        for (int c = 0; c < n; c++) out.at(r, c) = h.at(n - 1 - r, n - 1 - c);
    // for a module with M cap Q = A * 1 the first row is exactly denom * 1
    if (out.at(0, 0) != denom_) throw Error("module meets Q in a fractional ideal");
    for (int c = 1; c < n; c++)
        if (out.at(0, c) != 0) throw Error("unit_first_basis internal error");
    return out;
}

std::string FullModule::key() const
{
    std::ostringstream os;
    os << denom_.get_str() << ";";
    for (const Int& v : basis_.a) os << v.get_str() << ",";
    os << "|" << base_.str();
    return os.str();
}

}  // namespace mono
