#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cmlab/groebner.hpp"
#include "cmlab/ring.hpp"

using namespace cmlab;

namespace {

PolyContext ctx2() { return PolyContext{PrimeField(32003), MonoOrder::Grevlex, 2}; }

FreeVector poly(const PolyContext& cx, const std::string& s,
                const std::vector<std::string>& vars = {"x", "y"}) {
    return parse_poly(cx, vars, s);
}

} // namespace

TEST_CASE("field arithmetic is exact") {
    PrimeField fp(32003);
    CHECK(fp.add(32002, 1) == 0);
    CHECK(fp.mul(fp.inv(1234), 1234) == 1);
    CHECK(fp.reduce(-1) == 32002);
    CHECK(fp.pow(5, 0) == 1);
    CHECK_THROWS_AS(PrimeField(32001), std::invalid_argument);  // 3 * 10667
}

TEST_CASE("monomial order axioms") {
    auto cx = ctx2();
    Monomial x = Monomial::var(0), y = Monomial::var(1);
    Monomial x2 = mono_mul(x, x), xy = mono_mul(x, y), y2 = mono_mul(y, y);
    // grevlex: x^2 > xy > y^2 > x > y > 1
    CHECK(mono_cmp(x2, xy, cx.order, 2) > 0);
    CHECK(mono_cmp(xy, y2, cx.order, 2) > 0);
    CHECK(mono_cmp(y2, x, cx.order, 2) > 0);
    CHECK(mono_cmp(x, y, cx.order, 2) > 0);
    CHECK(mono_cmp(y, Monomial::one(), cx.order, 2) > 0);
    // multiplicative
    CHECK(mono_cmp(mono_mul(x2, y), mono_mul(xy, y), cx.order, 2) > 0);
    // lex
    CHECK(mono_cmp(x, y2, MonoOrder::Lex, 2) > 0);
    CHECK(mono_lcm(x2, xy) == mono_mul(x2, y));
    CHECK(mono_divides(xy, mono_mul(xy, x)));
    CHECK(!mono_divides(x2, xy));
}

TEST_CASE("polynomial parser") {
    auto cx = ctx2();
    FreeVector f = poly(cx, "x^2 - 3*y*x");
    REQUIRE(f.size() == 2);
    CHECK(f.lead().mono == mono_mul(Monomial::var(0), Monomial::var(0)));
    CHECK(f.terms()[1].coeff == 32000);
    CHECK(poly(cx, "x - x").is_zero());
    CHECK(poly(cx, "2*x + x").terms()[0].coeff == 3);
    CHECK_THROWS_AS(poly(cx, "x y"), std::invalid_argument);   // juxtaposition
    CHECK_THROWS_AS(poly(cx, "z + 1"), std::invalid_argument); // unknown variable
    CHECK_THROWS_AS(poly(cx, "2^3"), std::invalid_argument);
}

TEST_CASE("normal form examples") {
    auto cx = ctx2();
    // x^2 against {x} -> 0
    std::vector<FreeVector> G{poly(cx, "x")};
    CHECK(normal_form(cx, poly(cx, "x^2"), G).is_zero());
    // x^2 + y against {x^2 - y} -> 2y
    G = {poly(cx, "x^2 - y")};
    CHECK(normal_form(cx, poly(cx, "x^2 + y"), G) == poly(cx, "2*y"));
    // y against {x} -> y
    G = {poly(cx, "x")};
    CHECK(normal_form(cx, poly(cx, "y"), G) == poly(cx, "y"));
}

TEST_CASE("buchberger reduced bases") {
    auto cx = ctx2();
    SUBCASE("single monomial") {
        auto gb = buchberger(cx, {poly(cx, "x")});
        REQUIRE(gb.size() == 1);
        CHECK(gb[0] == poly(cx, "x"));
    }
    SUBCASE("x^2+y^2, xy in grevlex") {
        auto gb = buchberger(cx, {poly(cx, "x^2 + y^2"), poly(cx, "x*y")});
        REQUIRE(gb.size() == 3);
        bool has_xy = false, has_x2y2 = false, has_y3 = false;
        for (const auto& g : gb) {
            if (g == poly(cx, "x*y")) has_xy = true;
            if (g == poly(cx, "x^2 + y^2")) has_x2y2 = true;
            if (g == poly(cx, "y^3")) has_y3 = true;
        }
        CHECK(has_xy);
        CHECK(has_x2y2);
        CHECK(has_y3);
    }
    SUBCASE("linear elimination in lex") {
        PolyContext lex{PrimeField(32003), MonoOrder::Lex, 3};
        std::vector<std::string> vars{"x", "y", "z"};
        auto gb = buchberger(lex, {parse_poly(lex, vars, "x - y"), parse_poly(lex, vars, "y - z")});
        REQUIRE(gb.size() == 2);
        CHECK(gb[0] == parse_poly(lex, vars, "x - z"));
        CHECK(gb[1] == parse_poly(lex, vars, "y - z"));
    }
    SUBCASE("idempotent") {
        auto gb = buchberger(cx, {poly(cx, "x^2 + y^2"), poly(cx, "x*y")});
        auto gb2 = buchberger(cx, gb);
        CHECK(gb == gb2);
    }
}

TEST_CASE("groebner properties on random ideals") {
    auto cx = ctx2();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(0, 32002);
    auto random_poly = [&](int deg) {
        std::vector<Term> terms;
        for (int a = 0; a <= deg; ++a) {
            Monomial m;
            m.e[0] = static_cast<std::uint8_t>(a);
            m.e[1] = static_cast<std::uint8_t>(deg - a);
            m.deg = static_cast<std::uint16_t>(deg);
            terms.push_back(Term{0, m, static_cast<std::uint32_t>(coef(rng))});
        }
        return fv_normalize(cx, std::move(terms));
    };
    for (int round = 0; round < 12; ++round) {
        std::vector<FreeVector> gens{random_poly(2 + round % 2), random_poly(2)};
        auto gb = buchberger(cx, gens);
        // membership of the generators
        for (const auto& f : gens) CHECK(normal_form(cx, f, gb).is_zero());
        // every S-pair reduces to zero
        for (std::size_t i = 0; i < gb.size(); ++i)
            for (std::size_t j = i + 1; j < gb.size(); ++j) {
                const Term& a = gb[i].lead();
                const Term& b = gb[j].lead();
                Monomial l = mono_lcm(a.mono, b.mono);
                FreeVector s = fv_add_scaled(cx, fv_mul_mono(gb[i], mono_div(l, a.mono)),
                                             cx.fp.neg(1), mono_div(l, b.mono), gb[j]);
                CHECK(normal_form(cx, s, gb).is_zero());
            }
        // normal form is idempotent and stable
        FreeVector probe = random_poly(3);
        FreeVector r = normal_form(cx, probe, gb);
        CHECK(normal_form(cx, r, gb) == r);
        // f - nf(f) is in the submodule: reduce the difference
        FreeVector diff = fv_add_scaled(cx, probe, cx.fp.neg(1), Monomial::one(), r);
        CHECK(normal_form(cx, diff, gb).is_zero());
    }
}

TEST_CASE("syzygies") {
    auto cx = ctx2();
    SUBCASE("koszul relation on x, y") {
        auto syz = syzygy_basis(cx, {poly(cx, "x"), poly(cx, "y")}, {}, 1);
        REQUIRE(syz.size() == 1);
        // (y, -x) up to sign
        FreeVector expect;
        expect.raw().push_back(Term{0, Monomial::var(1), 1});
        expect.raw().push_back(Term{1, Monomial::var(0), 32002});
        CHECK(syz[0] == expect);
    }
    SUBCASE("no syzygies for a principal ideal over the polynomial ring") {
        auto syz = syzygy_basis(cx, {poly(cx, "x^2")}, {}, 1);
        CHECK(syz.empty());
    }
    SUBCASE("syzygy of x over k[x]/(x^2)") {
        PolyContext c1{PrimeField(32003), MonoOrder::Grevlex, 1};
        std::vector<std::string> v{"x"};
        FreeVector x = parse_poly(c1, v, "x");
        FreeVector x2 = parse_poly(c1, v, "x^2");
        auto syz = syzygy_basis(c1, {x}, {x2}, 1);
        REQUIRE(syz.size() == 1);
        CHECK(syz[0] == x);  // the syzygy is (x)
    }
    SUBCASE("columns annihilate the generator row") {
        std::vector<FreeVector> gens{poly(cx, "x^2"), poly(cx, "x*y"), poly(cx, "y^2")};
        auto syz = syzygy_basis(cx, gens, {}, 1);
        CHECK(!syz.empty());
        for (const FreeVector& s : syz) {
            FreeVector acc;
            for (const Term& t : s.terms()) {
                FreeVector contrib = fv_mul_mono(gens[static_cast<std::size_t>(t.comp)], t.mono);
                acc = fv_add_scaled(cx, acc, t.coeff, Monomial::one(), contrib);
            }
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("resource caps raise") {
    PolyContext cx{PrimeField(32003), MonoOrder::Grevlex, 2};
    GroebnerLimits lim;
    lim.max_pairs = 1;
    std::vector<std::string> vars{"x", "y"};
    std::vector<FreeVector> gens{parse_poly(cx, vars, "x^3 + y^2"), parse_poly(cx, vars, "x*y^2 + x"),
                                 parse_poly(cx, vars, "y^4 + x^2")};
    CHECK_THROWS_AS(buchberger(cx, gens, lim), ResourceLimitError);
}

TEST_CASE("determinism: same input gives identical output") {
    auto cx = ctx2();
    std::vector<FreeVector> gens{poly(cx, "x^2 + 17*y^2"), poly(cx, "x*y - 5*x^2")};
    auto a = buchberger(cx, gens);
    auto b = buchberger(cx, gens);
    CHECK(a == b);
}
