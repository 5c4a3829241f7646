#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mono/linalg.hpp"
#include "mono/order.hpp"
#include "support/corpus.hpp"

using namespace mono;

static Polynomial P(const std::string& s) { return parse_polynomial(s); }

TEST_SUITE("omega basis")
{
    TEST_CASE("fixtures")
    {
        // 2x^3+3x^2+4x+5: basis {1, 2t, 2t^2+3t}
        NumberField K(P("2x^3+3x^2+4x+5"));
        FieldElement t = K.theta();
        auto O = order_omega_basis(t, BaseRing::integers());
        auto expect = FullModule::from_generators(
            {K.one(), t.scaled(Rat(2)), (t * t).scaled(Rat(2)) + t.scaled(Rat(3))},
            BaseRing::integers());
        CHECK(O.module() == expect);
        REQUIRE(O.omega_basis().has_value());
        CHECK((*O.omega_basis())[0] == t.scaled(Rat(2)));
        CHECK((*O.omega_basis())[1] == (t * t).scaled(Rat(2)) + t.scaled(Rat(3)));

        // integral theta: Z[theta]
        NumberField K2(P("x^3-x-1"));
        auto O2 = order_omega_basis(K2.theta(), BaseRing::integers());
        CHECK(O2.module() == FullModule::power_module(K2.theta(), BaseRing::integers()));

        // theta/2 for x^3-x-1: {1, 4 theta, 2 theta^2}
        auto O3 = order_omega_basis(K2.theta().scaled(Rat(1, 2)), BaseRing::integers());
        auto expect3 = FullModule::from_generators(
            {K2.one(), K2.theta().scaled(Rat(4)), (K2.theta() * K2.theta()).scaled(Rat(2))},
            BaseRing::integers());
        CHECK(O3.module() == expect3);

        CHECK_THROWS_AS(order_omega_basis(K2.one(), BaseRing::integers()), Error);
    }
}

TEST_SUITE("triple oracle")
{
    TEST_CASE("fixtures")
    {
        NumberField K(P("x^3-x-1"));
        FieldElement t = K.theta();
        auto base = BaseRing::integers();
        CHECK(order_intersection(t, base).module() ==
              FullModule::power_module(t, base));
        for (const Rat& s : {Rat(1, 2), Rat(3, 2)}) {
            FieldElement xi = t.scaled(s);
            auto a = order_omega_basis(xi, base);
            auto b = order_intersection(xi, base);
            auto c = order_scalars(xi, base);
            CHECK(a.module() == b.module());
            CHECK(b.module() == c.module());
        }
        // unit epsilon: Z[e] = Z[e^-1]
        CHECK(order_intersection(t.inverse(), base).module() ==
              FullModule::power_module(t, base));
    }

    TEST_CASE("random corpus, all base fields")
    {
        Rng rng(101);
        auto base = BaseRing::integers();
        for (int trial = 0; trial < 30; trial++) {
            const NumberField& K = corpus::field_pool()[rng.below(corpus::field_pool().size())];
            FieldElement xi = corpus::random_generator(K, rng);
            auto a = order_omega_basis(xi, base);
            auto b = order_intersection(xi, base);
            auto c = order_scalars(xi, base);
            CHECK(a.module() == b.module());
            CHECK(b.module() == c.module());
        }
    }

    TEST_CASE("triple oracle over Z_S")
    {
        Rng rng(103);
        auto base = BaseRing::s_integers({Int(2), Int(3)});
        NumberField K(P("x^4-x-1"));
        for (int trial = 0; trial < 10; trial++) {
            FieldElement xi = corpus::random_generator(K, rng, 9);
            auto a = order_omega_basis(xi, base);
            auto b = order_intersection(xi, base);
            auto c = order_scalars(xi, base);
            CHECK(a.module() == b.module());
            CHECK(b.module() == c.module());
        }
    }
}

TEST_SUITE("order discriminants")
{
    TEST_CASE("fixtures")
    {
        NumberField K(P("2x^3+3x^2+4x+5"));
        auto O = order_omega_basis(K.theta(), BaseRing::integers());
        CHECK(O.discriminant() == -1448);

        NumberField K2(P("x^3-x-1"));
        CHECK(order_omega_basis(K2.theta(), BaseRing::integers()).discriminant() == -23);

        auto O3 = order_omega_basis(K2.theta().scaled(Rat(3, 2)), BaseRing::integers());
        CHECK(O3.discriminant() == -1073088);  // 6^6 * (-23)
        CHECK(O3.discriminant() == poly_discriminant(P("8x^3-18x-27")));
    }

    TEST_CASE("D(Z_alpha) = D(f_alpha) on the random corpus")
    {
        Rng rng(107);
        for (int trial = 0; trial < 25; trial++) {
            const NumberField& K = corpus::field_pool()[rng.below(corpus::field_pool().size())];
            FieldElement xi = corpus::random_generator(K, rng);
            auto O = order_omega_basis(xi, BaseRing::integers());
            CHECK(O.discriminant() == poly_discriminant(primitive_min_poly(xi)));
        }
    }
}

TEST_SUITE("GL2 invariance")
{
    TEST_CASE("Z_{U alpha} = Z_alpha and M_{U alpha} = (c alpha + d)^{1-n} M_alpha")
    {
        Rng rng(109);
        for (int trial = 0; trial < 25; trial++) {
            const NumberField& K = corpus::field_pool()[rng.below(corpus::field_pool().size())];
            int n = K.degree();
            FieldElement xi = corpus::random_generator(K, rng, 9);
            Mobius U = corpus::random_gl2z(rng);
            FieldElement beta = mobius_apply_element(U, xi);
            if (!is_generator(beta)) continue;
            auto Oa = order_scalars(xi, BaseRing::integers());
            auto Ob = order_scalars(beta, BaseRing::integers());
            CHECK(Oa.module() == Ob.module());

            FieldElement scale = (xi.scaled(U.c) + K.from_rational(U.d)).pow(1 - n);
            auto Ma = FullModule::power_module(xi, BaseRing::integers());
            auto Mb = FullModule::power_module(beta, BaseRing::integers());
            CHECK(Mb == Ma.scaled_by(scale));
        }
    }
}

TEST_SUITE("invariant ring tables")
{
    TEST_CASE("cubic fixture (2,3,4,5): w1 w2 = -4 w1 - 10")
    {
        BinaryForm F({Int(2), Int(3), Int(4), Int(5)});
        auto T = invariant_ring_table(F);
        // row for w1*w2 over (1, w1, w2)
        CHECK(T.table[0][1] == std::vector<Int>{Int(-10), Int(-4), Int(0)});
        CHECK(T.is_commutative());
        CHECK(T.is_associative());

        // against the exact field products: theta root of 2x^3+3x^2+4x+5
        NumberField K(P("2x^3+3x^2+4x+5"));
        auto w = omega_elements(K.theta());
        FieldElement prod = w[0] * w[1];
        CHECK(prod == K.from_rational(Rat(-10)) + w[0].scaled(Rat(-4)));
    }

    TEST_CASE("zero form and X^3 - Y^3")
    {
        BinaryForm zero({Int(0), Int(0), Int(0), Int(0)});
        auto T0 = invariant_ring_table(zero);
        for (const auto& r : T0.table)
            for (const auto& v : r)
                for (const Int& x : v) CHECK(x == 0);
        CHECK(T0.is_commutative());
        CHECK(T0.is_associative());

        BinaryForm cube({Int(1), Int(0), Int(0), Int(-1)});
        auto T1 = invariant_ring_table(cube);
        CHECK(T1.is_commutative());
        CHECK(T1.is_associative());
    }

    TEST_CASE("random forms: associative, commutative; irreducible ones match K")
    {
        Rng rng(113);
        int checked_field = 0;
        for (int trial = 0; trial < 60; trial++) {
            int n = 2 + static_cast<int>(rng.below(4));
            BinaryForm F = corpus::random_form(rng, n, 5);
            auto T = invariant_ring_table(F);
            CHECK(T.is_commutative());
            CHECK(T.is_associative());

            // when F is primitive irreducible with a0 > 0, compare with the
            // exact omega products in the field of a root
            if (F.a[0] <= 0 || n < 2) continue;
            Polynomial f = F.dehomogenized();
            if (f.degree() != n) continue;
            bool prim;
            try {
                prim = content_and_primitive(f).first == 1;
            } catch (const Error&) {
                continue;
            }
            if (!prim || !is_irreducible(f) || n < 3) continue;
            NumberField K(f);
            auto w = omega_elements(K.theta());
            std::vector<FieldElement> basis{K.one()};
            for (auto& x : w) basis.push_back(x);
            for (int i = 1; i <= n - 1; i++)
                for (int j = 1; j <= n - 1; j++) {
                    FieldElement lhs = basis[static_cast<std::size_t>(i)] *
                                       basis[static_cast<std::size_t>(j)];
                    FieldElement rhs = K.zero();
                    const auto& row = T.table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
                    for (int c = 0; c < n; c++)
                        rhs = rhs + basis[static_cast<std::size_t>(c)].scaled(Rat(row[static_cast<std::size_t>(c)]));
                    CHECK(lhs == rhs);
                }
            checked_field++;
        }
        CHECK(checked_field >= 5);
    }
}

TEST_SUITE("primitivity")
{
    TEST_CASE("fixtures")
    {
        NumberField K(P("x^3-x-1"));
        FieldElement t = K.theta();
        auto Zt = Order{FullModule::power_module(t, BaseRing::integers())};
        CHECK(is_primitive_order(Zt).primitive);

        auto sub = Order{FullModule::from_generators(
            {K.one(), t.scaled(Rat(2)), (t * t).scaled(Rat(2))}, BaseRing::integers())};
        auto res = is_primitive_order(sub);
        REQUIRE_FALSE(res.primitive);
        CHECK(res.witness_a == 2);
        REQUIRE(res.witness_order.has_value());
        CHECK(res.witness_order->module() == Zt.module());

        NumberField K2(P("2x^3+3x^2+4x+5"));
        auto O2 = order_omega_basis(K2.theta(), BaseRing::integers());
        CHECK(is_primitive_order(O2).primitive);
    }

    TEST_CASE("detects Z + a O' even with fractional O' bases")
    {
        // Dedekind field: O_K has basis 1, t, (t + t^2)/2
        NumberField K(P("x^3-x^2-2x-8"));
        FieldElement t = K.theta();
        FieldElement half = (t + t * t).scaled(Rat(1, 2));
        auto OK = FullModule::from_generators({K.one(), t, half}, BaseRing::integers());
        for (long a : {2L, 3L, 5L}) {
            auto O = Order{FullModule::from_generators(
                {K.one(), t.scaled(Rat(a)), half.scaled(Rat(a))}, BaseRing::integers())};
            auto res = is_primitive_order(O);
            REQUIRE_FALSE(res.primitive);
            CHECK(res.witness_a == a);
            CHECK(res.witness_order->module() == OK);
        }
        CHECK(is_primitive_order(Order{OK}).primitive);
    }

    TEST_CASE("rationally monogenic orders of degree >= 3 are primitive")
    {
        Rng rng(127);
        for (int trial = 0; trial < 15; trial++) {
            const NumberField& K = corpus::field_pool()[rng.below(corpus::field_pool().size())];
            FieldElement xi = corpus::random_generator(K, rng, 9);
            auto O = order_omega_basis(xi, BaseRing::integers());
            CHECK(is_primitive_order(O).primitive);
        }
    }
}
