#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mono/polynomial.hpp"
#include "mono/roots.hpp"
#include "support/oracles.hpp"

using namespace mono;

static Polynomial P(const std::string& s) { return parse_polynomial(s); }

TEST_SUITE("polynomial basics")
{
    TEST_CASE("parse and print")
    {
        CHECK(P("x^3-x-1") == Polynomial{1, 0, -1, -1});
        CHECK(P("2x^3+3x^2+4x+5") == Polynomial{2, 3, 4, 5});
        CHECK(P("-X^3+X+1") == Polynomial{-1, 0, 1, 1});
        CHECK(P("8x^3 - 2x - 1") == Polynomial{8, 0, -2, -1});
        CHECK(P("x^3-x-1").str() == "x^3 - x - 1");
        CHECK(P("5") == Polynomial{5});
        CHECK_THROWS_AS(P(""), Error);
        CHECK_THROWS_AS(P("x^"), Error);
    }

    TEST_CASE("evaluation, arithmetic, compose_scale")
    {
        Polynomial f = P("x^3-x-1");
        CHECK(f.eval(Rat(2)) == 5);
        CHECK((f * f).degree() == 6);
        CHECK(f.compose_scale(Rat(2)) == Polynomial{8, 0, -2, -1});
        // 27 f(2x/3) = 8x^3 - 18x - 27
        Polynomial g = f.compose_scale(Rat(2, 3)).scaled(Rat(27));
        CHECK(g == Polynomial{8, 0, -18, -27});
        CHECK(f.reversed() == Polynomial{-1, -1, 0, 1});
    }
}

TEST_SUITE("content and primitive part")
{
    TEST_CASE("known values")
    {
        auto [c1, p1] = content_and_primitive(Polynomial{4, -6, 2});
        CHECK(c1 == 2);
        CHECK(p1 == Polynomial{2, -3, 1});

        auto [c2, p2] = content_and_primitive(Polynomial{-1, 0, 1, 1});
        CHECK(c2 == 1);
        CHECK(p2 == Polynomial{1, 0, -1, -1});

        auto [c3, p3] = content_and_primitive(Polynomial{8, 0, -2, -1});
        CHECK(c3 == 1);
        CHECK(p3 == Polynomial{8, 0, -2, -1});

        CHECK_THROWS_AS(content_and_primitive(Polynomial()), Error);
    }

    TEST_CASE("idempotent on its primitive output")
    {
        Rng rng(7);
        for (int t = 0; t < 50; t++) {
            std::vector<Rat> c;
            int d = static_cast<int>(rng.below(5)) + 1;
            for (int i = 0; i <= d; i++) c.emplace_back(rng.range(-30, 30));
            Polynomial f(std::move(c));
            if (f.is_zero()) continue;
            auto [cont, prim] = content_and_primitive(f);
            auto [cont2, prim2] = content_and_primitive(prim);
            CHECK(cont2 == 1);
            CHECK(prim2 == prim);
            CHECK((prim.scaled(Rat(cont)) == f || prim.scaled(Rat(-cont)) == f));
        }
    }
}

TEST_SUITE("resultant and discriminant")
{
    TEST_CASE("fixtures against the Sylvester oracle")
    {
        CHECK(resultant(P("x-1"), P("x+1")) == 2);
        CHECK(resultant(P("x^2-2"), P("x^2-3")) == 1);  // (2-3)^2
        Polynomial f = P("x^3-x-1"), g = P("3x^2-1");
        // 23, not -23: the discriminant of f is -23 = -Res(f, f')/lc
        CHECK(oracle::sylvester_resultant(f, g) == 23);
        CHECK(resultant(f, g) == 23);
        CHECK_THROWS_AS(resultant(Polynomial(), Polynomial()), Error);
    }

    TEST_CASE("discriminants")
    {
        CHECK(poly_discriminant(P("x^2-1")) == 4);
        CHECK(poly_discriminant(P("x^3-x-1")) ==
              oracle::depressed_cubic_discriminant(Rat(-1), Rat(-1)));
        CHECK(poly_discriminant(P("x^3-x-1")) == -23);
        CHECK(poly_discriminant(P("2x^3+3x^2+4x+5")) ==
              oracle::cubic_discriminant(Rat(2), Rat(3), Rat(4), Rat(5)));
        CHECK(poly_discriminant(P("2x^3+3x^2+4x+5")) == -1448);
        CHECK(poly_discriminant(P("8x^3-18x-27")) == -1073088);
        CHECK_THROWS_AS(poly_discriminant(P("x+1")), Error);
    }

    TEST_CASE("random agreement with Sylvester determinant")
    {
        Rng rng(11);
        for (int t = 0; t < 60; t++) {
            std::vector<Rat> a, b;
            int da = static_cast<int>(rng.below(4)) + 1, db = static_cast<int>(rng.below(4)) + 1;
            for (int i = 0; i <= da; i++) a.emplace_back(rng.range(-9, 9));
            for (int i = 0; i <= db; i++) b.emplace_back(rng.range(-9, 9));
            Polynomial f(std::move(a)), g(std::move(b));
            if (f.is_zero() || g.is_zero()) continue;
            CHECK(resultant(f, g) == oracle::sylvester_resultant(f, g));
        }
    }

    TEST_CASE("antisymmetry")
    {
        Rng rng(13);
        for (int t = 0; t < 40; t++) {
            std::vector<Rat> a, b;
            int da = static_cast<int>(rng.below(4)) + 1, db = static_cast<int>(rng.below(4)) + 1;
            for (int i = 0; i <= da; i++) a.emplace_back(rng.range(-9, 9));
            for (int i = 0; i <= db; i++) b.emplace_back(rng.range(-9, 9));
            Polynomial f(std::move(a)), g(std::move(b));
            if (f.is_zero() || g.is_zero()) continue;
            Rat lhs = resultant(f, g);
            Rat rhs = resultant(g, f);
            if ((f.degree() * g.degree()) & 1) rhs = -rhs;
            CHECK(lhs == rhs);
        }
    }

    TEST_CASE("product rule D(fg) = +- D(f) D(g) Res(f,g)^2")
    {
        Rng rng(17);
        int done = 0;
        for (int t = 0; done < 100 && t < 400; t++) {
            std::vector<Rat> a, b;
            int da = static_cast<int>(rng.below(3)) + 1, db = static_cast<int>(rng.below(3)) + 1;
            for (int i = 0; i <= da; i++) a.emplace_back(rng.range(-6, 6));
            for (int i = 0; i <= db; i++) b.emplace_back(rng.range(-6, 6));
            Polynomial f(std::move(a)), g(std::move(b));
            if (f.degree() < 1 || g.degree() < 1) continue;
            Polynomial prod = f * g;
            if (prod.degree() < 2) continue;
            Rat lhs = poly_discriminant(prod);
            Rat r = resultant(f, g);
            Rat rhs;
            if (f.degree() >= 2 && g.degree() >= 2)
                rhs = poly_discriminant(f) * poly_discriminant(g) * r * r;
            else if (f.degree() >= 2)
                rhs = poly_discriminant(f) * r * r;
            else if (g.degree() >= 2)
                rhs = poly_discriminant(g) * r * r;
            else
                rhs = r * r;
            CHECK((lhs == rhs || lhs == -rhs));
            done++;
        }
        CHECK(done == 100);
    }
}

TEST_SUITE("irreducibility")
{
    TEST_CASE("fixtures")
    {
        CHECK(is_irreducible(P("x^4-x-1")));
        CHECK_FALSE(is_irreducible(P("x^4-x-2")));
        auto fac = find_factor(P("x^4-x-2"));
        REQUIRE(fac.has_value());
        CHECK(*fac == Polynomial{1, 1});  // root at -1
        CHECK(is_irreducible(P("x^2-2")));
        CHECK(is_irreducible(P("x^3-x-1")));
        CHECK(is_irreducible(P("x^5-x-1")));
        CHECK_THROWS_AS(is_irreducible(Polynomial{1, 0, 0, 0, 0, 0, 0, 0, 0, -1}), Error);
    }

    TEST_CASE("quadratic-factor split is found")
    {
        // (x^2+x+1)(x^2-x+2) has no rational roots
        Polynomial f = P("x^2+x+1") * P("x^2-x+2");
        auto fac = find_factor(f);
        REQUIRE(fac.has_value());
        CHECK((fac->degree() == 2));
        CHECK(Polynomial::divide_exact(f, *fac).has_value());
        CHECK_FALSE(is_irreducible(f));
    }

    TEST_CASE("non-monic splits and repeated factors")
    {
        Polynomial f = P("2x^2+x+1") * P("3x^2+x+4");
        CHECK_FALSE(is_irreducible(f));
        auto fac = find_factor(f);
        REQUIRE(fac.has_value());
        CHECK(Polynomial::divide_exact(f, *fac).has_value());

        Polynomial sq = P("x^2+x+1") * P("x^2+x+1");
        CHECK_FALSE(is_irreducible(sq));
    }

    TEST_CASE("random products of irreducibles are reducible")
    {
        Rng rng(23);
        for (int t = 0; t < 20; t++) {
            std::vector<Rat> a{Rat(1)};
            for (int i = 0; i < 2; i++) a.emplace_back(rng.range(-4, 4));
            std::vector<Rat> b{Rat(1)};
            for (int i = 0; i < 2; i++) b.emplace_back(rng.range(-4, 4));
            Polynomial f(std::move(a)), g(std::move(b));
            Polynomial prod = f * g;
            if (content_and_primitive(prod).first != 1) continue;
            if (poly_gcd(prod, prod.derivative()).degree() > 0) continue;
            CHECK_FALSE(is_irreducible(prod));
        }
    }
}

TEST_SUITE("real roots")
{
    TEST_CASE("sturm counts")
    {
        CHECK(count_real_roots(P("x^3-x-1")) == 1);
        CHECK(count_real_roots(P("x^4-x-1")) == 2);
        CHECK(count_real_roots(P("x^2+1")) == 0);
        CHECK(count_real_roots(P("x^2-2")) == 2);
    }
}
