#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cmlab/homology.hpp"
#include "cmlab/module.hpp"
#include "cmlab/sop.hpp"

using namespace cmlab;

namespace {

Ring make_ring(std::vector<std::string> vars, std::vector<std::string> ideal) {
    PolyContext cx{PrimeField(32003), MonoOrder::Grevlex, static_cast<int>(vars.size())};
    std::vector<FreeVector> gens;
    for (const auto& s : ideal) gens.push_back(parse_poly(cx, vars, s));
    return Ring(std::move(vars), std::move(gens));
}

Module quot(Ring& R, std::vector<std::string> polys, std::string label = "M") {
    std::vector<FreeVector> fs;
    for (const auto& s : polys) fs.push_back(parse_poly(R.ctx(), R.var_names(), s));
    return quotient_module(R, std::move(fs), std::move(label));
}

} // namespace

TEST_CASE("minimal presentation eliminates units") {
    Ring R = make_ring({"x", "y"}, {});
    // two generators, relation g0 = x g1: one generator survives
    std::vector<FreeVector> rels;
    {
        std::vector<Term> t;
        t.push_back(Term{0, Monomial::one(), 1});
        t.push_back(Term{1, Monomial::var(0), 32002});
        rels.push_back(fv_normalize(R.ctx(), std::move(t)));
    }
    Module M(R, {1, 0}, rels);
    CHECK(M.mu() == 1);
    CHECK(M.minimal().relations().empty());  // free of rank one
    CHECK(is_free(M));
}

TEST_CASE("resolutions over the labelled rings") {
    SUBCASE("periodic resolution of k over k[x]/(x^2)") {
        Ring R = make_ring({"x"}, {"x^2"});
        Module& k = R.residue_field();
        for (int n = 0; n <= 10; ++n) CHECK(k.betti(n) == 1);
    }
    SUBCASE("beta_n(k) = 2^n over k[x,y]/(x^2,xy,y^2)") {
        Ring R = make_ring({"x", "y"}, {"x^2", "x*y", "y^2"});
        Module& k = R.residue_field();
        long long expect = 1;
        for (int n = 0; n <= 10; ++n) {
            CHECK(k.betti(n) == expect);
            expect *= 2;
        }
    }
    SUBCASE("free module") {
        Ring R = make_ring({"x", "y"}, {"x^2"});
        Module& RM = R.as_module();
        CHECK(RM.betti(0) == 1);
        for (int n = 1; n <= 4; ++n) CHECK(RM.betti(n) == 0);
    }
    SUBCASE("koszul resolution of k over k[x,y]") {
        Ring R = make_ring({"x", "y"}, {});
        Module& k = R.residue_field();
        CHECK(k.betti(0) == 1);
        CHECK(k.betti(1) == 2);
        CHECK(k.betti(2) == 1);
        CHECK(k.betti(3) == 0);
    }
    SUBCASE("consecutive matrices compose to zero and are minimal") {
        Ring R = make_ring({"x", "y"}, {"x^2", "x*y", "y^2"});
        const Resolution& res = R.residue_field().resolution(5);
        const PolyContext& cx = R.ctx();
        for (std::size_t i = 0; i + 1 < res.mats.size(); ++i) {
            // d_i o d_{i+1} = 0 modulo I
            for (const FreeVector& col : res.mats[i + 1]) {
                FreeVector acc;
                for (const Term& t : col.terms())
                    acc = fv_add_scaled(cx, acc, t.coeff, t.mono,
                                        res.mats[i][static_cast<std::size_t>(t.comp)]);
                int rank = static_cast<int>(res.twists[i].size());
                CHECK(normal_form(cx, acc, R.ideal_in_free(rank)).is_zero());
            }
        }
        for (const auto& mat : res.mats)
            for (const FreeVector& col : mat)
                for (const Term& t : col.terms()) CHECK(t.mono.deg > 0);
    }
}

TEST_CASE("depth") {
    SUBCASE("depth of k is zero") {
        Ring R = make_ring({"x", "y"}, {"x^2"});
        CHECK(R.residue_field().depth() == 0);
    }
    SUBCASE("regular ring has full depth") {
        Ring R = make_ring({"x", "y"}, {});
        CHECK(R.as_module().depth() == 2);
    }
    SUBCASE("artinian hypersurface") {
        Ring R = make_ring({"x"}, {"x^2"});
        CHECK(R.as_module().depth() == 0);
    }
    SUBCASE("k[x,y]/(xy) is CM of dimension 1") {
        Ring R = make_ring({"x", "y"}, {"x*y"});
        CHECK(R.as_module().dim() == 1);
        CHECK(R.as_module().depth() == 1);
    }
    SUBCASE("k[x,y]/(x^2,xy) has a socle element: depth 0, dim 1") {
        Ring R = make_ring({"x", "y"}, {"x^2", "x*y"});
        CHECK(R.as_module().dim() == 1);
        CHECK(R.as_module().depth() == 0);
    }
    SUBCASE("zero module depth is an error") {
        Ring R = make_ring({"x"}, {"x^2"});
        std::vector<FreeVector> rels{FreeVector::term(0, Monomial::one(), 1)};
        Module Z(R, {0}, rels);
        CHECK_THROWS(Z.depth());
    }
}

TEST_CASE("mu and mu(mM)") {
    Ring R = make_ring({"x", "y"}, {});
    // R/m^2: mu = 1, m*M has 2 generators (images of x and y)
    Module M = quot(R, {"x^2", "x*y", "y^2"});
    CHECK(M.mu() == 1);
    CHECK(M.mu_of_mM() == 2);
    // the residue field: mM = 0
    CHECK(R.residue_field().mu_of_mM() == 0);
    // R itself: mM needs embdim generators
    CHECK(R.as_module().mu_of_mM() == 2);
}

TEST_CASE("radical_square_kills") {
    Ring R = make_ring({"x", "y"}, {});
    CHECK(quot(R, {"x^2", "x*y", "y^2"}).radical_square_kills());
    CHECK(R.residue_field().radical_square_kills());
    CHECK(!quot(R, {"x^2", "y^3"}).radical_square_kills());
    CHECK(!R.as_module().radical_square_kills());
}

TEST_CASE("cut by general linear forms") {
    std::mt19937_64 rng(42);
    SUBCASE("reduction on k[x,y]/(x^2)") {
        Ring R = make_ring({"x", "y"}, {"x^2"});
        Module& M = R.as_module();
        CutResult cut = cut_by_general_sop(M, 1, CutMode::Reduction, rng);
        REQUIRE(cut.forms.size() == 1);
        CHECK(*cut.quotient.length() == 2);
        CHECK(M.multiplicity() == 2);
    }
    SUBCASE("two cuts on the regular ring reach length 1") {
        Ring R = make_ring({"x", "y"}, {});
        CutResult cut = cut_by_general_sop(R.as_module(), 2, CutMode::Reduction, rng);
        CHECK(cut.forms.size() == 2);
        CHECK(*cut.quotient.length() == 1);
    }
    SUBCASE("t = 0 returns the module unchanged") {
        Ring R = make_ring({"x"}, {"x^2"});
        CutResult cut = cut_by_general_sop(R.as_module(), 0, CutMode::Reduction, rng);
        CHECK(cut.forms.empty());
        CHECK(*cut.quotient.length() == 2);
    }
    SUBCASE("depth-zero module rejects every form") {
        Ring R = make_ring({"x", "y"}, {"x^2", "x*y"});
        CHECK_THROWS_AS(cut_by_general_sop(R.as_module(), 1, CutMode::RegularOnly, rng),
                        CutError);
    }
    SUBCASE("regular forms drop the hilbert series exactly") {
        Ring R = make_ring({"x", "y"}, {"x*y"});
        Module& M = R.as_module();
        CutResult cut = cut_by_general_sop(M, 1, CutMode::RegularOnly, rng);
        LaurentPoly lhs = cut.quotient.hilbert().numerator;
        LaurentPoly rhs = lp_mul_one_minus_t(M.hilbert().numerator);
        lhs.trim();
        rhs.trim();
        CHECK(lhs.c == rhs.c);
    }
}

TEST_CASE("std basis and actions") {
    Ring R = make_ring({"x", "y"}, {"x^2", "x*y", "y^2"});
    Module& RM = R.as_module();
    const auto& basis = RM.std_basis();
    REQUIRE(basis.size() == 3);
    CHECK(basis[0].mono.is_one());
    CHECK(basis[0].degree == 0);
    CHECK(basis[1].degree == 1);
    CHECK(basis[2].degree == 1);
    auto X = RM.action_matrix(0);
    // x * 1 = x (basis index 1), x * x = 0, x * y = 0
    CHECK(X[1 * 3 + 0] == 1);
    CHECK(X[0 * 3 + 1] == 0);
    CHECK(X[2 * 3 + 2] == 0);
}
