#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mono/module.hpp"

using namespace mono;

static Polynomial P(const std::string& s) { return parse_polynomial(s); }

static IntMat rows_of(std::vector<std::vector<long>> v)
{
    IntMat m(static_cast<int>(v.size()), static_cast<int>(v[0].size()));
    for (std::size_t r = 0; r < v.size(); r++)
        for (std::size_t c = 0; c < v[r].size(); c++)
            m.at(static_cast<int>(r), static_cast<int>(c)) = Int(v[r][c]);
    return m;
}

// Brute-force membership of a small 2d point in the integer row span.
static bool member2(const IntMat& rows, long x, long y)
{
    for (long u = -12; u <= 12; u++)
        for (long v = -12; v <= 12; v++) {
            Int px = u * rows.at(0, 0) + v * rows.at(1, 0);
            Int py = u * rows.at(0, 1) + v * rows.at(1, 1);
            if (px == x && py == y) return true;
        }
    return false;
}

TEST_SUITE("hnf")
{
    TEST_CASE("fixtures")
    {
        CHECK(hnf(rows_of({{1, 0}, {0, 1}})) == rows_of({{1, 0}, {0, 1}}));
        CHECK(hnf(rows_of({{2, 0}, {0, 2}, {1, 1}})) == rows_of({{1, 1}, {0, 2}}));
        CHECK(hnf(rows_of({{0, 3}, {3, 0}})) == rows_of({{3, 0}, {0, 3}}));
        CHECK_THROWS_AS(hnf_full_rank(rows_of({{1, 2}, {2, 4}})), Error);
    }

    TEST_CASE("brute-force membership oracle on the 2x2 grid")
    {
        IntMat in = rows_of({{2, 0}, {0, 2}, {1, 1}});
        IntMat h = hnf(in);
        REQUIRE(h.rows == 2);
        // the HNF rows generate the same membership pattern
        for (long x = -4; x <= 4; x++)
            for (long y = -4; y <= 4; y++) {
                bool lhs = ((x % 2 == 0 && y % 2 == 0)) || ((x - 1) % 2 == 0 && (y - 1) % 2 == 0);
                bool via_input = ((x + y) % 2) == 0;  // lattice {x + y even}
                CHECK(lhs == via_input);
                CHECK(member2(h, x, y) == via_input);
            }
    }

    TEST_CASE("random: hnf is idempotent and preserves determinant")
    {
        Rng rng(3);
        for (int t = 0; t < 50; t++) {
            IntMat m(3, 3);
            for (auto& v : m.a) v = rng.range(-9, 9);
            if (intmat_det(m) == 0) continue;
            IntMat h = hnf_full_rank(m);
            CHECK(hnf_full_rank(h) == h);
            CHECK(abs_int(intmat_det(h)) == abs_int(intmat_det(m)));
            for (int i = 0; i < 3; i++) CHECK(h.at(i, i) > 0);
        }
    }
}

TEST_SUITE("modules")
{
    TEST_CASE("power lattices and denominators")
    {
        NumberField K(P("x^3-x-1"));
        FieldElement t = K.theta();
        auto Zt = FullModule::power_module(t, BaseRing::integers());
        CHECK(Zt.denom() == 1);
        CHECK(Zt.basis() == IntMat::identity(3));

        auto half = FullModule::from_generators({K.one(), t.scaled(Rat(1, 2)), t * t},
                                                BaseRing::integers());
        CHECK(half.denom() == 2);

        auto s2 = BaseRing::s_integers({Int(2)});
        auto doubled = FullModule::from_generators({K.one(), t.scaled(Rat(2)), (t * t).scaled(Rat(2))}, s2);
        auto pw = FullModule::power_module(t, s2);
        CHECK(doubled == pw);  // 2 is a unit of Z_S

        CHECK_THROWS_AS(FullModule::from_generators({K.one(), t + K.one()}, BaseRing::integers()),
                        Error);
        CHECK_THROWS_AS(BaseRing::s_integers({Int(4)}), Error);
    }

    TEST_CASE("equality, intersection, sum")
    {
        NumberField K(P("x^3-x-1"));
        FieldElement t = K.theta();
        auto Zt = FullModule::power_module(t, BaseRing::integers());
        CHECK(Zt.intersect(Zt) == Zt);

        // Z[theta] cap Z[theta^-1] = Z[theta] for the unit theta
        auto Zti = FullModule::power_module(t.inverse(), BaseRing::integers());
        CHECK(Zt.intersect(Zti) == Zt);

        // (1/2) Z[theta] cap Z[theta] = Z[theta]
        auto halfall = FullModule::from_generators(
            {K.one().scaled(Rat(1, 2)), t.scaled(Rat(1, 2)), (t * t).scaled(Rat(1, 2))},
            BaseRing::integers());
        CHECK(halfall.intersect(Zt) == Zt);
        CHECK(halfall.sum(Zt) == halfall);
        CHECK(Zt.contains(t * t));
        CHECK_FALSE(Zt.contains(t.scaled(Rat(1, 2))));

        // mismatched fields and base rings are rejected
        NumberField K2(P("x^4-x-1"));
        auto other = FullModule::power_module(K2.theta(), BaseRing::integers());
        CHECK_THROWS_AS(Zt.intersect(other), Error);
        auto zs = FullModule::power_module(t, BaseRing::s_integers({Int(2)}));
        CHECK_THROWS_AS(Zt.sum(zs), Error);
    }

    TEST_CASE("multiplier rings")
    {
        NumberField K(P("x^3-x-1"));
        FieldElement t = K.theta();
        auto Zt = FullModule::power_module(t, BaseRing::integers());
        CHECK(Zt.multiplier_ring() == Zt);  // already a ring

        // M_{theta/2}: multiplier ring must equal the omega-basis module
        // {1, 4 theta, 2 theta^2} coming from the coefficients of 8x^3-2x-1
        auto M = FullModule::power_module(t.scaled(Rat(1, 2)), BaseRing::integers());
        auto R = M.multiplier_ring();
        auto expect = FullModule::from_generators(
            {K.one(), t.scaled(Rat(4)), (t * t).scaled(Rat(2))}, BaseRing::integers());
        CHECK(R == expect);

        // fractional ideal (2, 1+theta) in Q(sqrt(-5)): multiplier ring Z[theta]
        NumberField K5(P("x^2+5"));
        FieldElement u = K5.theta();
        auto ideal =
            FullModule::from_generators({K5.from_rational(Rat(2)), K5.one() + u}, BaseRing::integers());
        auto ring = ideal.multiplier_ring();
        CHECK(ring == FullModule::power_module(u, BaseRing::integers()));
    }

    TEST_CASE("multiplier ring output is a ring containing 1 that fixes M")
    {
        NumberField K(P("x^4-x-1"));
        FieldElement t = K.theta();
        Rng rng(47);
        for (int trial = 0; trial < 15; trial++) {
            std::vector<Rat> c;
            for (int i = 0; i < 4; i++) c.emplace_back(Rat(rng.range(-9, 9), rng.range(1, 8)));
            for (Rat& q : c) q.canonicalize();
            FieldElement xi = K.from_coords(std::move(c));
            if (!is_generator(xi)) continue;
            auto M = FullModule::power_module(xi, BaseRing::integers());
            auto O = M.multiplier_ring();
            CHECK(O.contains(K.one()));
            // O M = M: every o_i m_j stays in M, and M is fixed
            for (const FieldElement& o : O.basis_elements())
                for (const FieldElement& m : M.basis_elements()) CHECK(M.contains(o * m));
            // multiplicatively closed
            for (const FieldElement& x : O.basis_elements())
                for (const FieldElement& y : O.basis_elements()) CHECK(O.contains(x * y));
        }
    }

    TEST_CASE("index and discriminant")
    {
        NumberField K(P("x^3-x-1"));
        FieldElement t = K.theta();
        auto Zt = FullModule::power_module(t, BaseRing::integers());
        auto sub = FullModule::from_generators({K.one(), t.scaled(Rat(2)), (t * t).scaled(Rat(2))},
                                               BaseRing::integers());
        CHECK(Zt.index_of(sub) == 4);
        CHECK_THROWS_AS(sub.index_of(Zt), Error);

        CHECK(Zt.discriminant() == poly_discriminant(P("x^3-x-1")));
        CHECK(Zt.discriminant() == -23);
        // scaling one basis vector by 2 multiplies the discriminant by 4
        CHECK(sub.discriminant() == Rat(4 * 4) * Zt.discriminant());

        // index-squared law on random submodules
        Rng rng(53);
        for (int trial = 0; trial < 20; trial++) {
            IntMat m(3, 3);
            for (auto& v : m.a) v = rng.range(-6, 6);
            if (intmat_det(m) == 0) continue;
            FullModule N(K, BaseRing::integers(), Int(1), hnf_full_rank(m));
            // N may not be inside Zt; use the sum as the ambient module
            FullModule A = N.sum(Zt);
            Rat idx = A.index_of(N);
            CHECK(N.discriminant() == idx * idx * A.discriminant());
        }
    }

    TEST_CASE("canonical representation is generator-order independent")
    {
        NumberField K(P("x^4-x-1"));
        FieldElement t = K.theta();
        auto a = FullModule::from_generators({K.one(), t, t * t, t * t * t}, BaseRing::integers());
        auto b = FullModule::from_generators({t * t * t, K.one(), t * t, t}, BaseRing::integers());
        CHECK(a == b);
        CHECK(a.key() == b.key());
        // rescaling a generator by a base unit (-1) changes nothing
        auto c2 = FullModule::from_generators({-(t * t * t), K.one(), t * t, t}, BaseRing::integers());
        CHECK(a == c2);
    }

    TEST_CASE("Z_S coherence: equality iff equal after clearing S-content")
    {
        NumberField K(P("x^3-x-1"));
        FieldElement t = K.theta();
        auto s23 = BaseRing::s_integers({Int(2), Int(3)});
        // {1, 12 theta, 18 theta^2} over Z_{2,3} is the full power lattice
        auto scaled = FullModule::from_generators(
            {K.one(), t.scaled(Rat(12)), (t * t).scaled(Rat(18))}, s23);
        auto pw = FullModule::power_module(t, s23);
        CHECK(scaled == pw);
        // over Z they differ
        auto scaled_z = FullModule::from_generators(
            {K.one(), t.scaled(Rat(12)), (t * t).scaled(Rat(18))}, BaseRing::integers());
        auto pw_z = FullModule::power_module(t, BaseRing::integers());
        CHECK_FALSE(scaled_z == pw_z);
        // a module whose 5-content survives over Z_{2,3}
        auto five = FullModule::from_generators(
            {K.one(), t.scaled(Rat(5)), (t * t).scaled(Rat(5))}, s23);
        CHECK_FALSE(five == pw);

        // units of the base ring
        CHECK(s23.is_unit(Int(6)));
        CHECK(s23.is_unit(Int(-8)));
        CHECK_FALSE(s23.is_unit(Int(5)));
        CHECK_FALSE(BaseRing::integers().is_unit(Int(2)));
        CHECK(BaseRing::integers().is_unit(Int(-1)));
    }

    TEST_CASE("unit-first basis")
    {
        // order Z + 3 O_K in the Dedekind field x^3 - x^2 - 2x - 8, where the
        // maximal order has basis 1, theta, (theta + theta^2)/2
        NumberField K(P("x^3-x^2-2x-8"));
        FieldElement t = K.theta();
        FieldElement half = (t + t * t).scaled(Rat(1, 2));
        auto OK = FullModule::from_generators({K.one(), t, half}, BaseRing::integers());
        CHECK(OK.discriminant() == -503);  // field discriminant
        auto O = FullModule::from_generators({K.one(), t.scaled(Rat(3)), half.scaled(Rat(3))},
                                             BaseRing::integers());
        IntMat ufb = O.unit_first_basis();
        CHECK(ufb.at(0, 0) == O.denom());
        CHECK(ufb.at(0, 1) == 0);
        CHECK(ufb.at(0, 2) == 0);
    }
}
