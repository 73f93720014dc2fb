#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmlab/hilbert.hpp"
#include "cmlab/module.hpp"

using namespace cmlab;

namespace {

Ring make_ring(std::vector<std::string> vars, std::vector<std::string> ideal) {
    PolyContext cx{PrimeField(32003), MonoOrder::Grevlex, static_cast<int>(vars.size())};
    std::vector<FreeVector> gens;
    for (const auto& s : ideal) gens.push_back(parse_poly(cx, vars, s));
    return Ring(std::move(vars), std::move(gens));
}

} // namespace

TEST_CASE("laurent helpers") {
    LaurentPoly a;
    a.c = {1, 2, 1};  // 1 + 2t + t^2 = (1+t)^2
    CHECK(a.eval_one() == 4);
    LaurentPoly b = lp_mul_one_minus_t(a);
    CHECK(b.eval_one() == 0);
    CHECK(lp_div_one_minus_t(b).c == a.c);
    LaurentPoly s = lp_shift(a, -2);
    CHECK(s.off == -2);
    CHECK(s.at(0) == 1);
}

TEST_CASE("monomial ideal numerators") {
    // k[x,y]/(x^2): N = 1 - t^2
    auto n = monomial_ideal_numerator({Monomial::var(0, 2)}, 2);
    CHECK(n.at(0) == 1);
    CHECK(n.at(2) == -1);
    // full ideal
    auto z = monomial_ideal_numerator({Monomial::one()}, 2);
    CHECK(z.is_zero());
    // (x, y): N = (1-t)^2
    auto c = monomial_ideal_numerator({Monomial::var(0), Monomial::var(1)}, 2);
    CHECK(c.at(0) == 1);
    CHECK(c.at(1) == -2);
    CHECK(c.at(2) == 1);
}

TEST_CASE("hilbert series of the labelled rings") {
    SUBCASE("k[x]/(x^2): q = 1 + t, dim 0, lambda = e = 2") {
        Ring R = make_ring({"x"}, {"x^2"});
        const HilbertSeries& h = R.hilbert();
        CHECK(h.dim == 0);
        CHECK(h.multiplicity() == 2);
        REQUIRE(h.length().has_value());
        CHECK(*h.length() == 2);
        CHECK(h.q.at(0) == 1);
        CHECK(h.q.at(1) == 1);
    }
    SUBCASE("k[x,y] free: dim 2, e = 1") {
        Ring R = make_ring({"x", "y"}, {});
        CHECK(R.hilbert().dim == 2);
        CHECK(R.hilbert().multiplicity() == 1);
        CHECK(!R.hilbert().length().has_value());
        CHECK(R.hilbert().coeff(3) == 4);  // dim of degree-3 forms
    }
    SUBCASE("k[x,y]/(x^2): (1+t)/(1-t), dim 1, e = 2") {
        Ring R = make_ring({"x", "y"}, {"x^2"});
        CHECK(R.hilbert().dim == 1);
        CHECK(R.hilbert().multiplicity() == 2);
        CHECK(R.hilbert().coeff(5) == 2);
    }
    SUBCASE("k[x,y]/(x^2,xy,y^2): length 3") {
        Ring R = make_ring({"x", "y"}, {"x^2", "x*y", "y^2"});
        CHECK(R.hilbert().dim == 0);
        CHECK(*R.hilbert().length() == 3);
    }
    SUBCASE("k[x,y]/(x^2,xy): dim 1, e = 1") {
        Ring R = make_ring({"x", "y"}, {"x^2", "x*y"});
        CHECK(R.hilbert().dim == 1);
        CHECK(R.hilbert().multiplicity() == 1);
    }
    SUBCASE("the field itself") {
        Ring R = make_ring({}, {});
        CHECK(R.hilbert().dim == 0);
        CHECK(*R.hilbert().length() == 1);
    }
}

TEST_CASE("hilbert series of modules with twists") {
    Ring R = make_ring({"x", "y"}, {});
    Module& k = R.residue_field();
    CHECK(k.dim() == 0);
    CHECK(*k.length() == 1);
    // twisted free module R(-2) + R(-3)
    Module F(R, {2, 3}, {});
    CHECK(F.dim() == 2);
    CHECK(F.hilbert().coeff(2) == 1);
    CHECK(F.hilbert().coeff(3) == 3);
    // negative twist: Laurent numerator
    Module G(R, {-1}, {});
    CHECK(G.hilbert().coeff(-1) == 1);
    CHECK(G.hilbert().coeff(0) == 2);
}

TEST_CASE("hilbert additivity under a regular form") {
    Ring R = make_ring({"x", "y"}, {"x^2"});
    Module& RM = R.as_module();
    std::vector<FreeVector> rels{parse_poly(R.ctx(), {"x", "y"}, "y")};
    Module Q(R, {0}, rels);
    LaurentPoly lhs = Q.hilbert().numerator;
    LaurentPoly rhs = lp_mul_one_minus_t(RM.hilbert().numerator);
    lhs.trim();
    rhs.trim();
    CHECK(lhs.off == rhs.off);
    CHECK(lhs.c == rhs.c);
    CHECK(*Q.length() == 2);
}

TEST_CASE("zero module") {
    Ring R = make_ring({"x"}, {"x^2"});
    std::vector<FreeVector> rels{FreeVector::term(0, Monomial::one(), 1)};
    Module Z(R, {0}, rels);
    CHECK(Z.is_zero());
    CHECK(Z.hilbert().zero);
    CHECK(Z.multiplicity() == 0);
    CHECK(Z.mu() == 0);
}
