#include "mono/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mono {

Polynomial::Polynomial(std::vector<Rat> leading_first) : c_(std::move(leading_first))
{
    normalize();
}

Polynomial::Polynomial(std::initializer_list<long> leading_first)
{
    c_.reserve(leading_first.size());
    for (long v : leading_first) c_.emplace_back(v);
    normalize();
}

void Polynomial::normalize()
{
    std::size_t i = 0;
    while (i < c_.size() && c_[i] == 0) i++;
    if (i) c_.erase(c_.begin(), c_.begin() + static_cast<long>(i));
}

Polynomial Polynomial::constant(const Rat& c)
{
    return Polynomial(std::vector<Rat>{c});
}

Polynomial Polynomial::monomial(const Rat& c, int k)
{
    std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
    v[0] = c;
    return Polynomial(std::move(v));
}

const Rat& Polynomial::lc() const
{
    if (is_zero()) throw Error("leading coefficient of zero polynomial");
    return c_.front();
}

Rat Polynomial::coeff(int k) const
{
    int d = degree();
    if (k < 0 || k > d) return Rat(0);
    return c_[static_cast<std::size_t>(d - k)];
}

bool Polynomial::is_integral() const
{
    for (const Rat& q : c_)
        if (q.get_den() != 1) return false;
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    int d = std::max(degree(), o.degree());
    if (d < 0) return Polynomial();
    std::vector<Rat> v(static_cast<std::size_t>(d) + 1, Rat(0));
    for (int k = 0; k <= d; k++) v[static_cast<std::size_t>(d - k)] = coeff(k) + o.coeff(k);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const
{
    std::vector<Rat> v = c_;
    for (Rat& q : v) q = -q;
    Polynomial r;
    r.c_ = std::move(v);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); i++)
        for (std::size_t j = 0; j < o.c_.size(); j++) v[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rat& s) const
{
    if (s == 0) return Polynomial();
    std::vector<Rat> v = c_;
    for (Rat& q : v) q *= s;
    Polynomial r;
    r.c_ = std::move(v);
    return r;
}

Rat Polynomial::eval(const Rat& x) const
{
    Rat acc(0);
    for (const Rat& q : c_) acc = acc * x + q;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    int d = degree();
    if (d <= 0) return Polynomial();
    std::vector<Rat> v(static_cast<std::size_t>(d), Rat(0));
    for (int k = 1; k <= d; k++) v[static_cast<std::size_t>(d - k)] = coeff(k) * k;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::compose_scale(const Rat& s) const
{
    std::vector<Rat> v = c_;
    Rat pw(1);
    int d = degree();
    for (int k = 1; k <= d; k++) {
        pw *= s;
        v[static_cast<std::size_t>(d - k)] *= pw;
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::reversed() const
{
    std::vector<Rat> v(c_.rbegin(), c_.rend());
    return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& f, const Polynomial& g)
{
    if (g.is_zero()) throw Error("division by zero polynomial");
    Polynomial r = f;
    int dg = g.degree();
    int dq = f.degree() - dg;
    if (dq < 0) return {Polynomial(), r};
    std::vector<Rat> q(static_cast<std::size_t>(dq) + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= dg) {
        int k = r.degree() - dg;
        Rat c = r.lc() / g.lc();
        q[static_cast<std::size_t>(dq - k)] = c;
        r = r - g.scaled(c) * monomial(Rat(1), k);
    }
    return {Polynomial(std::move(q)), r};
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& f, const Polynomial& g)
{
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

std::string Polynomial::str(const std::string& var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    int d = degree();
    for (int k = d; k >= 0; k--) {
        Rat c = coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (k == 0 || a != 1) os << a.get_str();
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::pair<Int, Polynomial> content_and_primitive(const Polynomial& f)
{
    if (f.is_zero()) throw Error("zero polynomial");
    if (!f.is_integral()) throw Error("content of non-integral polynomial");
    Int g(0);
    for (const Rat& q : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    Rat s = Rat(1) / Rat(g);
    if (f.lc() < 0) s = -s;
    return {g, f.scaled(s)};
}

// Subresultant PRS (fraction-free) on integer polynomials; sign and scaling
// handled so the value is the true resultant.
static Int resultant_integral(Polynomial A, Polynomial B)
{
    int sign = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
        std::swap(A, B);
    }
    if (B.degree() < 0) throw Error("resultant of zero polynomial");
    if (B.degree() == 0) {
        Int b = B.lc().get_num();
        Int r;
        mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(A.degree()));
        return sign * r;
    }
    Int g(1), h(1);
    while (true) {
        int da = A.degree(), db = B.degree();
        int delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        // pseudo-remainder: lc(B)^(delta+1) * A mod B
        Rat lb = B.lc();
        Polynomial R = A;
        {
            Rat mult(1);
            for (int i = 0; i <= delta; i++) mult *= lb;
            R = R.scaled(mult);
        }
        R = Polynomial::divrem(R, B).second;
        A = B;
        // divide R by g*h^delta, exact by the subresultant theory
        Int div = Int(g);
        for (int i = 0; i < delta; i++) div *= h;
        B = R.scaled(Rat(1) / Rat(div));
        if (!B.is_integral()) throw Error("subresultant internal error");
        g = A.lc().get_num();
        // h <- g^delta * h^(1-delta)
        if (delta > 0) {
            Int gn;
            mpz_pow_ui(gn.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            Int hd;
            mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            h = gn / hd;
        }
        if (B.is_zero()) return Int(0);
        if (B.degree() == 0) {
            // res = lc(B)^deg(A) / h^(deg(A)-1)
            Int b = B.lc().get_num();
            int l = A.degree();
            Int num;
            mpz_pow_ui(num.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(l));
            Int den;
            mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(l - 1));
            return sign * Int(num / den);
        }
    }
}

Rat resultant(const Polynomial& f, const Polynomial& g)
{
    if (f.is_zero() || g.is_zero()) throw Error("resultant of zero polynomial");
    if (f.degree() == 0 && g.degree() == 0) return Rat(1);
    // clear denominators: Res(u f, g) = u^{deg g} Res(f, g)
    Int uf(1), ug(1);
    for (const Rat& q : f.coeffs()) mpz_lcm(uf.get_mpz_t(), uf.get_mpz_t(), q.get_den_mpz_t());
    for (const Rat& q : g.coeffs()) mpz_lcm(ug.get_mpz_t(), ug.get_mpz_t(), q.get_den_mpz_t());
    Polynomial F = f.scaled(Rat(uf)), G = g.scaled(Rat(ug));
    Int r = resultant_integral(F, G);
    Rat scale(1);
    Rat ufq(uf), ugq(ug);
    for (int i = 0; i < g.degree(); i++) scale *= ufq;
    for (int i = 0; i < f.degree(); i++) scale *= ugq;
    return Rat(r) / scale;
}

Rat poly_discriminant(const Polynomial& f)
{
    if (f.is_zero() || f.degree() < 2) throw Error("discriminant needs degree >= 2");
    int n = f.degree();
    Rat r = resultant(f, f.derivative()) / f.lc();
    if (((n * (n - 1)) / 2) & 1) r = -r;
    return r;
}

Polynomial poly_gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        Polynomial r = Polynomial::divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rat(1) / a.lc());
}

XgcdResult poly_xgcd(const Polynomial& a, const Polynomial& b)
{
    Polynomial r0 = a, r1 = b;
    Polynomial u0 = Polynomial::constant(Rat(1)), u1;
    Polynomial v0, v1 = Polynomial::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = Polynomial::divrem(r0, r1);
        Polynomial u2 = u0 - q * u1, v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    Rat s = Rat(1) / r0.lc();
    return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

bool is_irreducible(const Polynomial& f) { return !find_factor(f).has_value(); }

Polynomial parse_polynomial(const std::string& text)
{
    // terms: [+-] [coef] [x [^ exp]]
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) i++; };
    std::vector<Rat> acc;  // ascending by power
    auto add_term = [&](const Rat& c, int k) {
        if (k >= static_cast<int>(acc.size())) acc.resize(static_cast<std::size_t>(k) + 1, Rat(0));
        acc[static_cast<std::size_t>(k)] += c;
    };
    skip_ws();
    bool any = false;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -1;
            i++;
            skip_ws();
        } else if (any) {
            throw Error("expected '+' or '-' in polynomial at position " + std::to_string(i));
        }
        // coefficient (integer or integer/integer)
        std::string num;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
        std::string den;
        if (i < text.size() && text[i] == '/') {
            i++;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den += text[i++];
            if (den.empty()) throw Error("bad coefficient in polynomial");
        }
        skip_ws();
        if (i < text.size() && text[i] == '*') { i++; skip_ws(); }
        Rat c = num.empty() ? Rat(1) : rat_from_str(den.empty() ? num : num + "/" + den);
        int k = 0;
        if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
            i++;
            skip_ws();
            k = 1;
            if (i < text.size() && text[i] == '^') {
                i++;
                skip_ws();
                std::string e;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) e += text[i++];
                if (e.empty()) throw Error("bad exponent in polynomial");
                k = std::stoi(e);
            }
        } else if (num.empty()) {
            throw Error("expected term in polynomial at position " + std::to_string(i));
        }
        add_term(sign > 0 ? c : Rat(-c), k);
        any = true;
        skip_ws();
    }
    if (!any) throw Error("empty polynomial text");
    std::vector<Rat> v(acc.rbegin(), acc.rend());
    return Polynomial(std::move(v));
}

}  // namespace mono
