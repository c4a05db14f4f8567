#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cicalc/asymptotics.hpp"

using namespace cicalc;

namespace {

struct Fix {
    CIRingPtr A1, A2;
    ModulePresentation M1, M2, kA2, freeA1;
    IdealPtr m1, j1, m2, x2;

    Fix() {
        auto P1 = Ring::make(101, {"x", "z"});
        A1 = CIRing::make(P1, {parse_poly(P1, "z^2")});
        M1 = ModulePresentation::cyclic(A1, {parse_poly(P1, "z")});
        freeA1 = ModulePresentation::free_module(A1);
        m1 = irrelevant_ideal(A1);
        j1 = std::make_shared<IdealData>(A1, std::vector<Poly>{parse_poly(P1, "x")});
        auto P2 = Ring::make(101, {"x", "z1", "z2"});
        A2 = CIRing::make(P2, {parse_poly(P2, "z1^2"), parse_poly(P2, "z2^2")});
        M2 = ModulePresentation::cyclic(A2, {parse_poly(P2, "z1")});
        kA2 = ModulePresentation::residue_field(A2);
        m2 = irrelevant_ideal(A2);
        x2 = std::make_shared<IdealData>(A2, std::vector<Poly>{parse_poly(P2, "x")});
    }
};

}  // namespace

TEST_CASE("fit of polynomial-type rows") {
    SUBCASE("constant nonzero row") {
        CHECK(fit_psi({1, 1, 1, 1, 1, 1}, 0) == Deg::of(0));
    }
    SUBCASE("zero row") { CHECK(fit_psi({0, 0, 0, 0, 0, 0}, 0) == Deg::minus_infinity()); }
    SUBCASE("linear row 2n-1") {
        CHECK(fit_psi({1, 3, 5, 7, 9, 11}, 0) == Deg::of(1));
    }
    SUBCASE("pre-asymptotic junk slides the window") {
        CHECK(fit_psi({17, 4, 4, 4, 4, 4}, 0) == Deg::of(0));
        CHECK(fit_psi({3, 1, 0, 0, 0, 0}, 0) == Deg::minus_infinity());
    }
    SUBCASE("window too short") {
        CHECK_THROWS_AS(fit_psi({1, 2, 4, 8, 16, 32}, 0), InconclusiveFit);
    }
}

TEST_CASE("length table of the periodic module against the maximal ideal") {
    Fix f;
    LengthTable t = ext_length_table(f.M1, *f.m1, 8, 6);
    for (int i = 1; i <= 8; ++i)
        for (int n = 1; n <= 6; ++n) CHECK(t.at(i, n) == 1);
    PsiReport rep = r_invariants_from_table(t, 2, 3);
    for (const Deg& d : rep.psi) CHECK(d == Deg::of(0));
    CHECK(rep.tails_ok());
    CHECK(rep.r0 == Deg::of(0));
    CHECK(rep.r1 == Deg::of(0));
    CHECK(rep.r == Deg::of(0));
}

TEST_CASE("length table vanishes against the parameter ideal") {
    Fix f;
    LengthTable t = ext_length_table(f.M1, *f.j1, 6, 6);
    CHECK(t.all_zero());
    PsiReport rep = r_invariants_from_table(t, 2, 3);
    CHECK(rep.r == Deg::minus_infinity());
}

TEST_CASE("free modules have vanishing tables") {
    Fix f;
    LengthTable t = ext_length_table(f.freeA1, *f.m1, 5, 5);
    CHECK(t.all_zero());
    PsiReport rep = r_invariants_from_table(t, 2, 3);
    CHECK(rep.r == Deg::minus_infinity());
}

TEST_CASE("oracle equivalence: order and minimality do not change the table") {
    Fix f;
    TableOptions base;
    TableOptions lex;
    lex.order.mono = MonoOrder::lex;
    TableOptions nonmin;
    nonmin.minimal = false;
    for (auto pair : std::vector<std::pair<const ModulePresentation*, const IdealData*>>{
             {&f.M1, f.m1.get()}, {&f.M1, f.j1.get()}, {&f.M2, f.m2.get()}}) {
        LengthTable a = ext_length_table(*pair.first, *pair.second, 5, 5, base);
        LengthTable b = ext_length_table(*pair.first, *pair.second, 5, 5, lex);
        LengthTable c = ext_length_table(*pair.first, *pair.second, 5, 5, nonmin);
        CHECK(a.cells == b.cells);
        CHECK(a.cells == c.cells);
    }
}

TEST_CASE("syzygy shift identity in the table") {
    Fix f;
    // cells of M at i equal cells of the first syzygy at i-1, for i >= 2
    FreeResolution res = minimal_resolution(f.kA2, 7);
    ModulePresentation s1 = res.syzygy_module(1);
    LengthTable tm = ext_length_table(f.kA2, *f.m2, 6, 5);
    LengthTable ts = ext_length_table(s1, *f.m2, 5, 5);
    for (int i = 2; i <= 6; ++i)
        for (int n = 1; n <= 5; ++n) CHECK(tm.at(i, n) == ts.at(i - 1, n));
}

TEST_CASE("MCM duality identity: ext into the quotient equals ext into the power") {
    Fix f;
    // l(Ext^i(M, A/I^n)) = l(Ext^{i+1}(M, I^n)) for MCM M, i >= 1
    FreeResolution res = minimal_resolution(f.M1, 5);
    for (int n = 1; n <= 3; ++n) {
        std::vector<VecPoly> gens;
        for (const Poly& g : f.m1->power(n)) gens.push_back({g});
        std::vector<VecPoly> genvecs;
        ModulePresentation In = present_subquotient(f.A1, 1, {0}, gens, {}, &genvecs);
        ModulePresentation Aq = ModulePresentation::cyclic(f.A1, f.m1->power(n));
        for (int i = 1; i <= 3; ++i) {
            int64_t lhs = ext_module(res, Aq, i).length();
            int64_t rhs = ext_module(res, In, i + 1).length();
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("equivalence report is all-true for vanishing instances") {
    Fix f;
    SUBCASE("periodic module against the parameter ideal") {
        EquivalenceReport rep = check_equivalences(f.M1, *f.j1, 7, 6);
        CHECK(rep.r_is_minus_infinity);
        CHECK(rep.rowwise_vanishing);
        CHECK(rep.uniform_vanishing);
        CHECK(rep.variety_meets_origin_only);
        CHECK(rep.tor_vanishes_past_index);
        CHECK(rep.all_equal);
    }
    SUBCASE("free module against the maximal ideal") {
        EquivalenceReport rep = check_equivalences(f.freeA1, *f.m1, 7, 6);
        CHECK(rep.all_equal);
        CHECK(rep.r_is_minus_infinity);
    }
}

TEST_CASE("equivalence report is all-false for the periodic module against m") {
    Fix f;
    EquivalenceReport rep = check_equivalences(f.M1, *f.m1, 7, 6);
    CHECK_FALSE(rep.r_is_minus_infinity);
    CHECK_FALSE(rep.rowwise_vanishing);
    CHECK_FALSE(rep.uniform_vanishing);
    CHECK_FALSE(rep.variety_meets_origin_only);
    CHECK_FALSE(rep.tor_vanishes_past_index);
    CHECK(rep.all_equal);
}

TEST_CASE("psi formula under a regular quotient") {
    Fix f;
    auto P1 = f.A1->ambient();
    SUBCASE("periodic module, maximal ideal") {
        ModxReport rep = psi_under_modx(f.M1, *f.m1, parse_poly(P1, "x"), 7, 6);
        CHECK(rep.formula_holds);
        for (const Deg& d : rep.lhs) CHECK(d == Deg::of(0));
        CHECK(rep.r_matches);
        CHECK(rep.r_M == Deg::of(0));
    }
    SUBCASE("free module: everything is minus infinity") {
        ModxReport rep = psi_under_modx(f.freeA1, *f.m1, parse_poly(P1, "x"), 6, 6);
        CHECK(rep.formula_holds);
        for (const Deg& d : rep.lhs) CHECK(d == Deg::minus_infinity());
        CHECK(rep.r_matches);
    }
}

TEST_CASE("superficial descent of vanishing r") {
    Fix f;
    auto P1 = f.A1->ambient();
    SUBCASE("periodic module along the parameter") {
        DescentReport rep = psi_superficial_descent(f.M1, *f.j1, parse_poly(P1, "x"), 7, 6);
        CHECK(rep.applicable);
        CHECK(rep.holds);
        CHECK(rep.r_downstairs == Deg::minus_infinity());
    }
    SUBCASE("precondition gate") {
        DescentReport rep = psi_superficial_descent(f.M1, *f.m1, parse_poly(P1, "x"), 7, 6);
        CHECK_FALSE(rep.applicable);
        CHECK(!rep.skip_reason.empty());
    }
}

TEST_CASE("table csv shape") {
    Fix f;
    LengthTable t = ext_length_table(f.M1, *f.m1, 2, 3);
    CHECK(t.csv() == "i\\n,1,2,3\n1,1,1,1\n2,1,1,1\n");
}
