#include "mono/order.hpp"

#include <cmath>
#include <sstream>

#include "mono/linalg.hpp"

namespace mono {

Order::Order(FullModule m) : module_(std::move(m))
{
    if (!module_.is_ring()) throw Error("module is not a ring containing 1");
}

std::vector<std::vector<Int>> Order::structure_table() const
{
    int n = field().degree();
    auto bas = module_.basis_elements();
    QMat b(n, n);
    for (int r = 0; r < n; r++)
        for (int c = 0; c < n; c++) b.at(r, c) = bas[static_cast<std::size_t>(r)].coords()[static_cast<std::size_t>(c)];
    QMat binv = qmat_inverse(b);
    std::vector<std::vector<Int>> rows;
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            FieldElement p = bas[static_cast<std::size_t>(i)] * bas[static_cast<std::size_t>(j)];
            std::vector<Int> row(static_cast<std::size_t>(n));
            for (int c = 0; c < n; c++) {
                Rat acc(0);
                for (int k = 0; k < n; k++) acc += p.coords()[static_cast<std::size_t>(k)] * binv.at(k, c);
                if (acc.get_den() != 1) throw Error("structure table not integral");
                row[static_cast<std::size_t>(c)] = acc.get_num();
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

std::vector<FieldElement> omega_elements(const FieldElement& alpha)
{
    if (!is_generator(alpha)) throw Error("alpha does not generate the field");
    const NumberField& K = alpha.field();
    int n = K.degree();
    Polynomial f = primitive_min_poly(alpha);
    std::vector<FieldElement> w;
    for (int i = 1; i <= n - 1; i++) {
        // w_i = a_0 alpha^i + a_1 alpha^{i-1} + ... + a_{i-1} alpha
        FieldElement acc = K.zero();
        for (int j = 0; j <= i - 1; j++)
            acc = acc + alpha.pow(i - j).scaled(f.coeff(n - j));
        w.push_back(acc);
    }
    return w;
}

Order order_omega_basis(const FieldElement& alpha, const BaseRing& base)
{
    const NumberField& K = alpha.field();
    std::vector<FieldElement> gens{K.one()};
    for (auto& w : omega_elements(alpha)) gens.push_back(w);
    Order o{FullModule::from_generators(gens, base)};
    o.omega_ = omega_elements(alpha);
    return o;
}

Order order_intersection(const FieldElement& alpha, const BaseRing& base)
{
    if (alpha.is_zero()) throw Error("alpha must be nonzero");
    if (!is_generator(alpha)) throw Error("alpha does not generate the field");
    auto Ma = FullModule::power_module(alpha, base);
    auto Mi = FullModule::power_module(alpha.inverse(), base);
    return Order{Ma.intersect(Mi)};
}

Order order_scalars(const FieldElement& alpha, const BaseRing& base)
{
    if (!is_generator(alpha)) throw Error("alpha does not generate the field");
    return Order{FullModule::power_module(alpha, base).multiplier_ring()};
}

BinaryForm::BinaryForm(std::vector<Int> coeffs) : a(std::move(coeffs))
{
    if (form_degree() < 2) throw Error("binary form needs degree >= 2");
}

BinaryForm BinaryForm::homogenize(const Polynomial& f)
{
    if (!f.is_integral()) throw Error("homogenization needs integer coefficients");
    int n = f.degree();
    std::vector<Int> v;
    for (int k = 0; k <= n; k++) v.push_back(f.coeff(n - k).get_num());
    return BinaryForm(std::move(v));
}

Int BinaryForm::eval(const Int& x, const Int& y) const
{
    // F = sum a_k x^{n-k} y^k: fold in x, adding a_k y^k at each step
    int n = form_degree();
    Int acc = a[0];
    Int ypow(1);
    for (int k = 1; k <= n; k++) {
        ypow *= y;
        acc = acc * x + a[static_cast<std::size_t>(k)] * ypow;
    }
    return acc;
}

Polynomial BinaryForm::dehomogenized() const
{
    std::vector<Rat> c;
    for (const Int& v : a) c.emplace_back(v);
    return Polynomial(std::move(c));
}

std::string BinaryForm::str() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); i++) {
        if (i) os << ",";
        os << a[i].get_str();
    }
    os << ")";
    return os.str();
}

InvariantRingTable invariant_ring_table(const BinaryForm& F)
{
    int n = F.form_degree();
    InvariantRingTable t{F, n, {}};
    t.table.assign(static_cast<std::size_t>(n - 1),
                   std::vector<std::vector<Int>>(static_cast<std::size_t>(n - 1)));
    for (int i = 1; i <= n - 1; i++)
        for (int j = 1; j <= n - 1; j++) {
            std::vector<Int> row(static_cast<std::size_t>(n), Int(0));
            // w_i w_j = - sum_{max(i+j-n,1) <= k <= i} a_{i+j-k} w_k
            //           + sum_{j < k <= min(i+j,n)} a_{i+j-k} w_k,  w_n = -a_n
            auto add = [&](int k, const Int& coef) {
                if (k == n)
                    row[0] += coef * (-F.a[static_cast<std::size_t>(n)]);
                else
                    row[static_cast<std::size_t>(k)] += coef;
            };
            int lo = std::max(i + j - n, 1);
            for (int k = lo; k <= i; k++) add(k, -F.a[static_cast<std::size_t>(i + j - k)]);
            for (int k = j + 1; k <= std::min(i + j, n); k++)
                add(k, F.a[static_cast<std::size_t>(i + j - k)]);
            t.table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::move(row);
        }
    return t;
}

std::vector<Int> InvariantRingTable::multiply(const std::vector<Int>& x,
                                              const std::vector<Int>& y) const
{
    std::vector<Int> out(static_cast<std::size_t>(n), Int(0));
    // constant * anything
    for (int c = 0; c < n; c++) out[static_cast<std::size_t>(c)] += x[0] * y[static_cast<std::size_t>(c)];
    for (int i = 1; i <= n - 1; i++) {
        if (x[static_cast<std::size_t>(i)] == 0) continue;
        out[static_cast<std::size_t>(i)] += x[static_cast<std::size_t>(i)] * y[0];
        for (int j = 1; j <= n - 1; j++) {
            if (y[static_cast<std::size_t>(j)] == 0) continue;
            Int coef = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            const auto& row = table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            for (int c = 0; c < n; c++) out[static_cast<std::size_t>(c)] += coef * row[static_cast<std::size_t>(c)];
        }
    }
    return out;
}

bool InvariantRingTable::is_commutative() const
{
    for (int i = 0; i < n - 1; i++)
        for (int j = 0; j < n - 1; j++)
            if (table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                return false;
    return true;
}

bool InvariantRingTable::is_associative() const
{
    // check (w_i w_j) w_k = w_i (w_j w_k) on all basis triples
    auto unit = [&](int i) {
        std::vector<Int> v(static_cast<std::size_t>(n), Int(0));
        v[static_cast<std::size_t>(i)] = 1;
        return v;
    };
    for (int i = 1; i <= n - 1; i++)
        for (int j = 1; j <= n - 1; j++)
            for (int k = 1; k <= n - 1; k++) {
                auto lhs = multiply(multiply(unit(i), unit(j)), unit(k));
                auto rhs = multiply(unit(i), multiply(unit(j), unit(k)));
                if (lhs != rhs) return false;
            }
    return true;
}

PrimitivityResult is_primitive_order(const Order& O)
{
    const NumberField& K = O.field();
    int n = K.degree();
    if (n < 3) throw Error("primitivity test needs degree >= 3");
    Rat d = O.discriminant();
    if (d.get_den() != 1) throw Error("order discriminant not integral");
    Int D = abs_int(Int(d.get_num()));

    // candidate primes a with a^{2(n-1)} | D: find the small prime divisors
    // through one gcd with the primorial of the primes below 10^6, then a
    // perfect-power check on the cofactor
    static const std::vector<unsigned long>& sieve = []() -> const std::vector<unsigned long>& {
        static std::vector<unsigned long> primes;
        const unsigned long limit = 1000000;
        std::vector<bool> comp(limit + 1, false);
        for (unsigned long p = 2; p <= limit; p++) {
            if (comp[p]) continue;
            primes.push_back(p);
            for (unsigned long q = p * p; q <= limit; q += p) comp[q] = true;
        }
        return primes;
    }();
    static const Int& primorial = []() -> const Int& {
        static Int prod(1);
        for (unsigned long p : sieve) prod *= static_cast<long>(p);
        return prod;
    }();

    std::vector<Int> candidates;
    {
        Int rem = D;
        Int g;
        mpz_gcd(g.get_mpz_t(), D.get_mpz_t(), primorial.get_mpz_t());
        for (unsigned long p : sieve) {
            if (g == 1) break;
            if (!mpz_divisible_ui_p(g.get_mpz_t(), p)) continue;
            mpz_divexact_ui(g.get_mpz_t(), g.get_mpz_t(), p);
            int e = 0;
            while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
                mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
                e++;
            }
            if (e >= 2 * (n - 1)) candidates.emplace_back(static_cast<long>(p));
        }
        if (rem > 1 && mpz_perfect_power_p(rem.get_mpz_t())) {
            for (int e = 63; e >= 2; e--) {
                Int root;
                if (mpz_root(root.get_mpz_t(), rem.get_mpz_t(), static_cast<unsigned long>(e)) != 0) {
                    if (is_prime(root) && e >= 2 * (n - 1)) candidates.push_back(root);
                    break;
                }
            }
        }
    }
    if (!O.base().is_z())
        for (auto it = candidates.begin(); it != candidates.end();)
            it = O.base().is_unit(*it) ? candidates.erase(it) : it + 1;

    const FullModule& M = O.module();
    IntMat ufb = M.unit_first_basis();  // rows over denom, first row = denom * e0
    const Int& den = M.denom();

    // structure constants over the unit-first basis (products are integral)
    std::vector<std::vector<Int>> table;  // table[i*n+j] = coords of b_i b_j
    auto build_table = [&]() {
        if (!table.empty()) return;
        QMat b(n, n);
        for (int r = 0; r < n; r++)
            for (int c = 0; c < n; c++) b.at(r, c) = Rat(ufb.at(r, c)) / Rat(den);
        QMat binv = qmat_inverse(b);
        std::vector<FieldElement> bas;
        for (int i = 0; i < n; i++) {
            std::vector<Rat> coords(static_cast<std::size_t>(n));
            for (int c = 0; c < n; c++) coords[static_cast<std::size_t>(c)] = Rat(ufb.at(i, c)) / Rat(den);
            bas.push_back(K.from_coords(std::move(coords)));
        }
        table.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {});
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) {
                FieldElement p = bas[static_cast<std::size_t>(i)] * bas[static_cast<std::size_t>(j)];
                std::vector<Int> row(static_cast<std::size_t>(n));
                for (int c = 0; c < n; c++) {
                    Rat y(0);
                    for (int k = 0; k < n; k++)
                        y += p.coords()[static_cast<std::size_t>(k)] * binv.at(k, c);
                    if (y.get_den() != 1) throw Error("order structure table not integral");
                    row[static_cast<std::size_t>(c)] = y.get_num();
                }
                table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(j)] = std::move(row);
            }
    };

    for (const Int& a : candidates) {
        if (!mpz_fits_slong_p(a.get_mpz_t())) throw Error("primitivity candidate too large");
        long am = a.get_si();
        double fcount = std::pow(static_cast<double>(am), n - 1);
        if (fcount > 2e8) throw Error("primitivity candidate too large");
        build_table();

        // all arithmetic below is modulo a^2 (enough to test w = 0 mod a and
        // phi(w/a) = 0 mod a); functionals are phi = e_0* + sum c_r e_r*
        unsigned long long a2 =
            static_cast<unsigned long long>(am) * static_cast<unsigned long long>(am);
        std::vector<unsigned long long> tmod(static_cast<std::size_t>(n) *
                                             static_cast<std::size_t>(n) *
                                             static_cast<std::size_t>(n));
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++)
                for (int k = 0; k < n; k++) {
                    const Int& v =
                        table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                    Int r = v % Int(static_cast<long>(a2));
                    if (r < 0) r += Int(static_cast<long>(a2));
                    tmod[(static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                          static_cast<std::size_t>(j)) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(k)] = r.get_ui();
                }
        auto tm = [&](int i, int j, int k) {
            return tmod[(static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(j)) * static_cast<std::size_t>(n) +
                        static_cast<std::size_t>(k)];
        };
        auto mulmod = [&](unsigned long long x, unsigned long long y) {
            return static_cast<unsigned long long>(
                (static_cast<unsigned __int128>(x) * y) % a2);
        };

        std::vector<long> c(static_cast<std::size_t>(n), 0);  // c[0] unused
        std::vector<unsigned long long> w(static_cast<std::size_t>(n));
        while (true) {
            // check Lambda_c: v_r = e_r - c_r e_0; products must lie in a*Lambda
            bool ring = true;
            for (int r = 1; r < n && ring; r++)
                for (int s = r; s < n && ring; s++) {
                    unsigned long long cr = static_cast<unsigned long long>(c[static_cast<std::size_t>(r)]);
                    unsigned long long cs = static_cast<unsigned long long>(c[static_cast<std::size_t>(s)]);
                    for (int k = 0; k < n; k++) {
                        unsigned long long v = tm(r, s, k);
                        if (k == r) v = (v + a2 - cs % a2) % a2;
                        if (k == s) v = (v + a2 - cr % a2) % a2;
                        if (k == 0) v = (v + mulmod(cr, cs)) % a2;
                        w[static_cast<std::size_t>(k)] = v;
                    }
                    unsigned long long ua = static_cast<unsigned long long>(am);
                    for (int k = 0; k < n && ring; k++)
                        if (w[static_cast<std::size_t>(k)] % ua != 0) ring = false;
                    if (!ring) break;
                    // phi(w / a) mod a with phi = (1, c_1, ..., c_{n-1})
                    unsigned long long acc = (w[0] / ua) % ua;
                    for (int k = 1; k < n; k++)
                        acc = (acc + (w[static_cast<std::size_t>(k)] / ua) %
                                         ua * static_cast<unsigned long long>(
                                                  c[static_cast<std::size_t>(k)])) %
                              ua;
                    if (acc % ua != 0) ring = false;
                }
            if (ring) {
                // materialize O' = (1/a) Lambda and double-check exactly
                IntMat gen(2 * n, n);
                for (int r = 0; r < n; r++) gen.at(r, r) = a;
                for (int r = 1; r < n; r++) {
                    gen.at(n + r, 0) = Int(-c[static_cast<std::size_t>(r)]);
                    gen.at(n + r, r) = Int(1);
                }
                IntMat lam = hnf_full_rank(gen);
                IntMat rows(n, n);
                for (int r = 0; r < n; r++)
                    for (int cc = 0; cc < n; cc++) {
                        Int s(0);
                        for (int k = 0; k < n; k++) s += lam.at(r, k) * ufb.at(k, cc);
                        rows.at(r, cc) = s;
                    }
                FullModule cand(K, M.base(), den * a, rows);
                if (cand.is_ring()) return {false, a, Order{cand}};
            }
            // next c
            int pos = n - 1;
            while (pos >= 1 && c[static_cast<std::size_t>(pos)] == am - 1) {
                c[static_cast<std::size_t>(pos)] = 0;
                pos--;
            }
            if (pos < 1) break;
            c[static_cast<std::size_t>(pos)]++;
        }
    }
    return {true, Int(0), std::nullopt};
}

}  // namespace mono
