#include "mono/number_field.hpp"

#include <algorithm>
#include <sstream>

#include "mono/linalg.hpp"
#include "mono/roots.hpp"

namespace mono {

struct NumberField::Impl {
    Polynomial f0;
    int n = 0;
    // coordinates of theta^k over 1, theta, ..., theta^(n-1), k = 0..2n-2
    std::vector<std::vector<Rat>> theta_pow;
    // power sums p_k = Tr(theta^k), k = 0..2n-2
    std::vector<Rat> psums;
};

NumberField::NumberField(const Polynomial& f0)
{
    if (f0.degree() < 2) throw Error("defining polynomial must have degree >= 2");
    if (!f0.is_integral()) throw Error("defining polynomial must be integral");
    auto [cont, prim] = content_and_primitive(f0);
    if (cont != 1 || prim != f0) throw Error("defining polynomial must be primitive with positive leading coefficient");
    if (auto fac = find_factor(f0))
        throw Error("defining polynomial is reducible", fac->str());

    auto impl = std::make_shared<Impl>();
    impl->f0 = f0;
    int n = impl->n = f0.degree();

    // theta^n = -(a_1 theta^{n-1} + ... + a_n)/a_0, then iterate
    impl->theta_pow.resize(static_cast<std::size_t>(2 * n - 1));
    for (int k = 0; k < n; k++) {
        std::vector<Rat> v(static_cast<std::size_t>(n), Rat(0));
        v[static_cast<std::size_t>(k)] = 1;
        impl->theta_pow[static_cast<std::size_t>(k)] = std::move(v);
    }
    for (int k = n; k <= 2 * n - 2; k++) {
        const auto& prev = impl->theta_pow[static_cast<std::size_t>(k - 1)];
        std::vector<Rat> v(static_cast<std::size_t>(n), Rat(0));
        // multiply prev by theta
        for (int i = 0; i < n - 1; i++) v[static_cast<std::size_t>(i + 1)] = prev[static_cast<std::size_t>(i)];
        Rat top = prev[static_cast<std::size_t>(n - 1)];
        if (top != 0) {
            for (int i = 0; i < n; i++)
                v[static_cast<std::size_t>(i)] -= top * f0.coeff(i) / f0.lc();
        }
        impl->theta_pow[static_cast<std::size_t>(k)] = std::move(v);
    }

    // Newton's identities for power sums of the roots of f0
    impl->psums.resize(static_cast<std::size_t>(2 * n - 1));
    impl->psums[0] = Rat(n);
    for (int k = 1; k <= 2 * n - 2; k++) {
        // a_0 p_k = -k a_k - sum_{i=1}^{k-1} a_i p_{k-i}   (a_i = 0 for i > n)
        Rat acc = Rat(-k) * f0.coeff(n - k);
        for (int i = 1; i < k; i++)
            acc -= f0.coeff(n - i) * impl->psums[static_cast<std::size_t>(k - i)];
        impl->psums[static_cast<std::size_t>(k)] = acc / f0.lc();
    }

    impl_ = std::move(impl);
}

int NumberField::degree() const { return impl_->n; }
const Polynomial& NumberField::defining_poly() const { return impl_->f0; }

FieldElement NumberField::theta() const
{
    std::vector<Rat> v(static_cast<std::size_t>(impl_->n), Rat(0));
    v[1] = 1;
    return FieldElement(*this, std::move(v));
}

FieldElement NumberField::from_coords(std::vector<Rat> ascending) const
{
    if (static_cast<int>(ascending.size()) != impl_->n)
        throw Error("coordinate vector has wrong length");
    return FieldElement(*this, std::move(ascending));
}

FieldElement NumberField::from_rational(const Rat& q) const
{
    std::vector<Rat> v(static_cast<std::size_t>(impl_->n), Rat(0));
    v[0] = q;
    return FieldElement(*this, std::move(v));
}

FieldElement NumberField::zero() const { return from_rational(Rat(0)); }
FieldElement NumberField::one() const { return from_rational(Rat(1)); }

const Rat& NumberField::power_sum(int k) const
{
    return impl_->psums.at(static_cast<std::size_t>(k));
}

bool FieldElement::is_zero() const
{
    for (const Rat& q : c_)
        if (q != 0) return false;
    return true;
}

bool FieldElement::is_rational() const
{
    for (std::size_t i = 1; i < c_.size(); i++)
        if (c_[i] != 0) return false;
    return true;
}

static void check_same_field(const FieldElement& x, const FieldElement& y)
{
    if (!x.field().same_field(y.field())) throw Error("elements of different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const
{
    check_same_field(*this, o);
    std::vector<Rat> v = c_;
    for (std::size_t i = 0; i < v.size(); i++) v[i] += o.c_[i];
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const
{
    std::vector<Rat> v = c_;
    for (Rat& q : v) q = -q;
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::scaled(const Rat& s) const
{
    std::vector<Rat> v = c_;
    for (Rat& q : v) q *= s;
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator*(const FieldElement& o) const
{
    check_same_field(*this, o);
    int n = static_cast<int>(c_.size());
    const auto& pow = field_.impl()->theta_pow;
    std::vector<Rat> conv(static_cast<std::size_t>(2 * n - 1), Rat(0));
    for (int i = 0; i < n; i++) {
        if (c_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < n; j++) {
            if (o.c_[static_cast<std::size_t>(j)] == 0) continue;
            conv[static_cast<std::size_t>(i + j)] +=
                c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
        }
    }
    std::vector<Rat> v(static_cast<std::size_t>(n), Rat(0));
    for (int k = 0; k <= 2 * n - 2; k++) {
        if (conv[static_cast<std::size_t>(k)] == 0) continue;
        const auto& pk = pow[static_cast<std::size_t>(k)];
        for (int i = 0; i < n; i++) v[static_cast<std::size_t>(i)] += conv[static_cast<std::size_t>(k)] * pk[static_cast<std::size_t>(i)];
    }
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::inverse() const
{
    if (is_zero()) throw Error("inverse of zero");
    // coordinate polynomial in ascending order -> leading first
    std::vector<Rat> lf(c_.rbegin(), c_.rend());
    Polynomial a(std::move(lf));
    auto x = poly_xgcd(a, field_.impl()->f0);
    if (x.g.degree() != 0) throw Error("inverse: defining polynomial not irreducible?");
    // u a + v f0 = 1  =>  a^{-1} = u mod f0
    Polynomial u = Polynomial::divrem(x.u, field_.impl()->f0).second;
    int n = field_.impl()->n;
    std::vector<Rat> v(static_cast<std::size_t>(n), Rat(0));
    for (int k = 0; k <= u.degree(); k++) v[static_cast<std::size_t>(k)] = u.coeff(k);
    return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(int k) const
{
    FieldElement base = k < 0 ? inverse() : *this;
    int e = k < 0 ? -k : k;
    FieldElement acc = field_.one();
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const
{
    return field_.same_field(o.field_) && c_ == o.c_;
}

Rat FieldElement::trace() const
{
    Rat t(0);
    for (std::size_t i = 0; i < c_.size(); i++)
        t += c_[i] * field_.power_sum(static_cast<int>(i));
    return t;
}

std::string FieldElement::str() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); i++) {
        if (i) os << ",";
        os << c_[i].get_str();
    }
    os << "]";
    return os.str();
}

Mobius::Mobius(Rat a_, Rat b_, Rat c_, Rat d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_))
{
    if (det() == 0) throw Error("Mobius matrix is singular");
}

Mobius Mobius::operator*(const Mobius& o) const
{
    return Mobius(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
}

Mobius Mobius::inverse() const { return Mobius(d, -b, -c, a); }

Mobius Mobius::normalized_primitive() const
{
    Int l(1);
    for (const Rat* q : {&a, &b, &c, &d}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q->get_den_mpz_t());
    Int g(0);
    std::vector<Int> e;
    for (const Rat* q : {&a, &b, &c, &d}) {
        Int v = Int(q->get_num()) * (l / Int(q->get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        e.push_back(v);
    }
    for (Int& v : e) v /= g;
    for (const Int& v : e) {
        if (v == 0) continue;
        if (v < 0)
            for (Int& w : e) w = -w;
        break;
    }
    return Mobius(Rat(e[0]), Rat(e[1]), Rat(e[2]), Rat(e[3]));
}

std::string Mobius::str() const
{
    return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," + d.get_str() + "]]";
}

P1Point P1Point::infinity(const NumberField& K)
{
    return P1Point{true, K.zero()};
}

P1Point mobius_apply(const Mobius& C, const P1Point& xi)
{
    const NumberField& K = xi.field();
    if (xi.infinite) {
        if (C.c == 0) return P1Point::infinity(K);
        return P1Point::of(K.from_rational(C.a / C.c));
    }
    const FieldElement& x = xi.value;
    FieldElement den = x.scaled(C.c) + K.from_rational(C.d);
    if (den.is_zero()) return P1Point::infinity(K);
    FieldElement num = x.scaled(C.a) + K.from_rational(C.b);
    return P1Point::of(num / den);
}

FieldElement mobius_apply_element(const Mobius& C, const FieldElement& xi)
{
    P1Point p = mobius_apply(C, P1Point::of(xi));
    if (p.infinite) throw Error("Mobius image is infinity");
    return p.value;
}

Polynomial min_poly(const FieldElement& xi)
{
    const NumberField& K = xi.field();
    int n = K.degree();
    // rows: coordinates of xi^0, xi^1, ...; stop at first linear dependence
    std::vector<std::vector<Rat>> rows;
    FieldElement p = K.one();
    for (int d = 0; d <= n; d++) {
        rows.push_back(p.coords());
        QMat m(static_cast<int>(rows.size()), n);
        for (std::size_t r = 0; r < rows.size(); r++)
            for (int c = 0; c < n; c++) m.at(static_cast<int>(r), c) = rows[r][static_cast<std::size_t>(c)];
        if (qmat_rank(m) < static_cast<int>(rows.size())) {
            // xi^d = combination of lower powers: solve transpose system
            QMat sys(n, d);
            for (int r = 0; r < n; r++)
                for (int c = 0; c < d; c++) sys.at(r, c) = rows[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
            // least-squares-free exact solve via pivoting on d independent rows
            QMat aug(n, d + 1);
            for (int r = 0; r < n; r++) {
                for (int c = 0; c < d; c++) aug.at(r, c) = sys.at(r, c);
                aug.at(r, d) = rows.back()[static_cast<std::size_t>(r)];
            }
            // reduce; read solution from pivot rows
            std::vector<Rat> sol(static_cast<std::size_t>(d), Rat(0));
            {
                QMat w = aug;
                int rank = 0;
                std::vector<int> pivcol;
                for (int col = 0; col < d && rank < n; col++) {
                    int piv = -1;
                    for (int r = rank; r < n; r++)
                        if (w.at(r, col) != 0) {
                            piv = r;
                            break;
                        }
                    if (piv < 0) continue;
                    for (int c = 0; c <= d; c++) std::swap(w.at(piv, c), w.at(rank, c));
                    Rat inv = Rat(1) / w.at(rank, col);
                    for (int c = col; c <= d; c++) w.at(rank, c) *= inv;
                    for (int r = 0; r < n; r++) {
                        if (r == rank) continue;
                        Rat f = w.at(r, col);
                        if (f == 0) continue;
                        for (int c = col; c <= d; c++) w.at(r, c) -= f * w.at(rank, c);
                    }
                    pivcol.push_back(col);
                    rank++;
                }
                for (std::size_t i = 0; i < pivcol.size(); i++)
                    sol[static_cast<std::size_t>(pivcol[i])] = w.at(static_cast<int>(i), d);
            }
            // min poly: X^d - sum sol_k X^k, monic
            std::vector<Rat> lead_first(static_cast<std::size_t>(d) + 1, Rat(0));
            lead_first[0] = 1;
            for (int k = 0; k < d; k++)
                lead_first[static_cast<std::size_t>(d - k)] = -sol[static_cast<std::size_t>(k)];
            return Polynomial(std::move(lead_first));
        }
        p = p * xi;
    }
    throw Error("min_poly internal error");
}

Polynomial primitive_min_poly(const FieldElement& xi)
{
    Polynomial m = min_poly(xi);
    Int den(1);
    for (const Rat& c : m.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    return content_and_primitive(m.scaled(Rat(den))).second;
}

bool is_generator(const FieldElement& xi)
{
    return min_poly(xi).degree() == xi.field().degree();
}

std::optional<FieldElement> root_in_field(const Polynomial& f, const NumberField& K, unsigned prec)
{
    if (f.is_zero() || f.degree() < 1) throw Error("root_in_field needs degree >= 1");
    int n = K.degree();
    if (f.degree() != n) return std::nullopt;  // degree obstruction (subfields out of scope)

    auto kz = canonical_roots(K.defining_poly(), prec);
    auto fz = canonical_roots(f, prec);

    // classify embedding slots and target roots into reals and upper-half
    // representatives of conjugate pairs
    auto classify = [&](const std::vector<MpComplex>& zs) {
        std::vector<int> reals, ups;
        for (int i = 0; i < static_cast<int>(zs.size()); i++) {
            if (zs[static_cast<std::size_t>(i)].im == 0)
                reals.push_back(i);
            else if (zs[static_cast<std::size_t>(i)].im > 0)
                ups.push_back(i);
        }
        return std::pair(reals, ups);
    };
    auto [kreal, kup] = classify(kz);
    auto [freal, fup] = classify(fz);
    if (kreal.size() != freal.size() || kup.size() != fup.size()) return std::nullopt;

    int nr = static_cast<int>(kreal.size()), np = static_cast<int>(kup.size());

    std::vector<int> rperm(static_cast<std::size_t>(nr));
    for (int i = 0; i < nr; i++) rperm[static_cast<std::size_t>(i)] = i;
    std::vector<int> pperm(static_cast<std::size_t>(np));
    for (int i = 0; i < np; i++) pperm[static_cast<std::size_t>(i)] = i;

    std::vector<FieldElement> found;
    bool rounding_failed = false;

    // try every real->real injection and pair->pair matching (both orientations)
    std::vector<int> orient(static_cast<std::size_t>(np), 0);
    auto attempt = [&](const std::vector<int>& rp, const std::vector<int>& pp,
                       const std::vector<int>& ori) {
        // assignment: embedding slot -> target value
        std::vector<MpComplex> target(static_cast<std::size_t>(n), MpComplex::zero(prec));
        for (int i = 0; i < nr; i++)
            target[static_cast<std::size_t>(kreal[static_cast<std::size_t>(i)])] =
                fz[static_cast<std::size_t>(freal[static_cast<std::size_t>(rp[static_cast<std::size_t>(i)])])];
        for (int i = 0; i < np; i++) {
            MpComplex w = fz[static_cast<std::size_t>(fup[static_cast<std::size_t>(pp[static_cast<std::size_t>(i)])])];
            if (ori[static_cast<std::size_t>(i)]) w = w.conj();
            int slot = kup[static_cast<std::size_t>(i)];
            target[static_cast<std::size_t>(slot)] = w;
            // the conjugate embedding slot is the partner with negated imag
            for (int j = 0; j < n; j++) {
                if (j == slot) continue;
                if (cmp(kz[static_cast<std::size_t>(j)].re, kz[static_cast<std::size_t>(slot)].re) == 0 &&
                    cmp(kz[static_cast<std::size_t>(j)].im, -kz[static_cast<std::size_t>(slot)].im) == 0) {
                    target[static_cast<std::size_t>(j)] = w.conj();
                }
            }
        }
        // solve V c = target,  V[j][i] = kz[j]^i
        std::vector<MpComplex> c(static_cast<std::size_t>(n), MpComplex::zero(prec));
        {
            // complex Gaussian elimination
            std::vector<std::vector<MpComplex>> m(static_cast<std::size_t>(n));
            for (int r = 0; r < n; r++) {
                m[static_cast<std::size_t>(r)].reserve(static_cast<std::size_t>(n) + 1);
                MpComplex pw(mpf_class(1, prec), mpf_class(0, prec));
                for (int k = 0; k < n; k++) {
                    m[static_cast<std::size_t>(r)].push_back(pw);
                    pw = pw * kz[static_cast<std::size_t>(r)];
                }
                m[static_cast<std::size_t>(r)].push_back(target[static_cast<std::size_t>(r)]);
            }
            for (int col = 0; col < n; col++) {
                int piv = -1;
                mpf_class best(0, prec);
                for (int r = col; r < n; r++) {
                    mpf_class mag = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].norm();
                    if (piv < 0 || mag > best) {
                        best = mag;
                        piv = r;
                    }
                }
                if (best == 0) return;  // singular; cannot happen for distinct roots
                std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(col)]);
                MpComplex inv = MpComplex(mpf_class(1, prec), mpf_class(0, prec)) /
                                m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
                for (int k = col; k <= n; k++)
                    m[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)] =
                        m[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)] * inv;
                for (int r = 0; r < n; r++) {
                    if (r == col) continue;
                    MpComplex f2 = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
                    if (f2.norm() == 0) continue;
                    for (int k = col; k <= n; k++)
                        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
                            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -
                            f2 * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)];
                }
            }
            for (int r = 0; r < n; r++) c[static_cast<std::size_t>(r)] = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)];
        }
        // round to rationals and verify exactly
        mpf_class imtol(1, prec);
        mpf_div_2exp(imtol.get_mpf_t(), imtol.get_mpf_t(), prec / 2);
        std::vector<Rat> coords(static_cast<std::size_t>(n));
        for (int i = 0; i < n; i++) {
            if (abs(c[static_cast<std::size_t>(i)].im) > imtol) return;
            auto r = rationalize(c[static_cast<std::size_t>(i)].re, prec);
            if (!r) {
                rounding_failed = true;
                return;
            }
            coords[static_cast<std::size_t>(i)] = *r;
        }
        FieldElement xi = K.from_coords(std::move(coords));
        // exact check f(xi) = 0
        FieldElement acc = K.zero();
        for (const Rat& coeff : f.coeffs()) acc = acc * xi + K.from_rational(coeff);
        if (acc.is_zero()) {
            for (const FieldElement& g : found)
                if (g == xi) return;
            found.push_back(xi);
        }
    };

    // enumerate real permutations (n <= 8 so at most 8! in pathological
    // all-real splits; usually tiny)
    std::sort(rperm.begin(), rperm.end());
    do {
        std::sort(pperm.begin(), pperm.end());
        do {
            for (int mask = 0; mask < (1 << np); mask++) {
                for (int i = 0; i < np; i++) orient[static_cast<std::size_t>(i)] = (mask >> i) & 1;
                attempt(rperm, pperm, orient);
            }
        } while (std::next_permutation(pperm.begin(), pperm.end()));
    } while (std::next_permutation(rperm.begin(), rperm.end()));

    if (found.empty()) {
        if (rounding_failed) throw Error("precision exhausted");
        return std::nullopt;
    }
    // deterministic choice: smallest value under the first canonical embedding
    std::size_t best = 0;
    if (found.size() > 1) {
        auto value_at_first = [&](const FieldElement& e) {
            MpComplex acc = MpComplex::zero(prec);
            MpComplex z = kz[0];
            MpComplex pw(mpf_class(1, prec), mpf_class(0, prec));
            for (const Rat& q : e.coords()) {
                acc = acc + MpComplex(mpf_class(q, prec), mpf_class(0, prec)) * pw;
                pw = pw * z;
            }
            return acc;
        };
        MpComplex bv = value_at_first(found[0]);
        for (std::size_t i = 1; i < found.size(); i++) {
            MpComplex v = value_at_first(found[i]);
            int cres = cmp(v.re, bv.re);
            if (cres < 0 || (cres == 0 && cmp(v.im, bv.im) < 0)) {
                bv = v;
                best = i;
            }
        }
    }
    return found[best];
}

}  // namespace mono
