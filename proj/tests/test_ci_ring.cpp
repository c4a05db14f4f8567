#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cicalc/ci_ring.hpp"
#include "cicalc/presentation.hpp"

using namespace cicalc;

namespace {

CIRingPtr make_a1() {
    auto P = Ring::make(101, {"x", "z"});
    return CIRing::make(P, {parse_poly(P, "z^2")});
}

CIRingPtr make_a2() {
    auto P = Ring::make(101, {"x", "z1", "z2"});
    return CIRing::make(P, {parse_poly(P, "z1^2"), parse_poly(P, "z2^2")});
}

}  // namespace

TEST_CASE("ci ring construction") {
    SUBCASE("hypersurface x,z mod z^2") {
        auto A1 = make_a1();
        CHECK(A1->dim() == 1);
        CHECK(A1->codim() == 1);
        CHECK(A1->dim() + A1->codim() == A1->ambient()->nvars());
    }
    SUBCASE("codimension two") {
        auto A2 = make_a2();
        CHECK(A2->dim() == 1);
        CHECK(A2->codim() == 2);
        CHECK(A2->dim() + A2->codim() == A2->ambient()->nvars());
    }
    SUBCASE("z^2, z^3 is not a regular sequence") {
        auto P = Ring::make(101, {"x", "z"});
        CHECK_THROWS_AS(CIRing::make(P, {parse_poly(P, "z^2"), parse_poly(P, "z^3")}),
                        RegularSequenceError);
    }
    SUBCASE("degree-1 relation rejected") {
        auto P = Ring::make(101, {"x", "z"});
        CHECK_THROWS_AS(CIRing::make(P, {parse_poly(P, "z")}), DegreeError);
    }
    SUBCASE("dimension zero rejected by default") {
        auto P = Ring::make(101, {"z"});
        CHECK_THROWS_AS(CIRing::make(P, {parse_poly(P, "z^2")}), StructuralError);
        auto B = CIRing::make(P, {parse_poly(P, "z^2")}, /*allow_dim_zero=*/true);
        CHECK(B->dim() == 0);
    }
}

TEST_CASE("m-primary detection") {
    auto A1 = make_a1();
    auto A2 = make_a2();
    auto P1 = A1->ambient();
    auto P2 = A2->ambient();
    SUBCASE("maximal ideal") {
        IdealData m1(A1, {parse_poly(P1, "x"), parse_poly(P1, "z")});
        CHECK(m1.is_m_primary());
    }
    SUBCASE("graded parameter x in A1") {
        IdealData j1(A1, {parse_poly(P1, "x")});
        CHECK(j1.is_m_primary());
        CHECK(j1.quotient_dim() == 0);
    }
    SUBCASE("(z1) in A2 is not primary to the irrelevant ideal") {
        IdealData z1(A2, {parse_poly(P2, "z1")});
        CHECK_FALSE(z1.is_m_primary());
        CHECK(z1.quotient_dim() == 1);
    }
}

TEST_CASE("ideal powers and colengths") {
    auto A1 = make_a1();
    auto P1 = A1->ambient();
    IdealData m1(A1, {parse_poly(P1, "x"), parse_poly(P1, "z")});
    IdealData j1(A1, {parse_poly(P1, "x")});
    SUBCASE("l(A1/m1^n) = 2n-1, oracle from the monomial basis") {
        for (int n = 1; n <= 6; ++n) CHECK(m1.colength(n) == 2 * n - 1);
    }
    SUBCASE("l(A1/J1^n) = 2n") {
        for (int n = 1; n <= 6; ++n) CHECK(j1.colength(n) == 2 * n);
    }
    SUBCASE("residue field has length 1") { CHECK(m1.colength(1) == 1); }
    SUBCASE("power containment I^{n+1} inside I^n") {
        for (int n = 1; n <= 5; ++n) {
            GroebnerBasis gb = A1->gb_over_quotient(1, [&] {
                std::vector<VecPoly> g;
                for (const Poly& q : m1.power(n)) g.push_back({q});
                return g;
            }());
            for (const Poly& q : m1.power(n + 1)) CHECK(gb.contains({q}));
        }
    }
    SUBCASE("generator-level product containment I^n . I inside I^{n+1}") {
        for (int n = 1; n <= 4; ++n) {
            GroebnerBasis gb = A1->gb_over_quotient(1, [&] {
                std::vector<VecPoly> g;
                for (const Poly& q : m1.power(n + 1)) g.push_back({q});
                return g;
            }());
            for (const Poly& a : m1.power(n))
                for (const Poly& b : m1.gens()) CHECK(gb.contains({A1->nf(a * b)}));
        }
    }
    SUBCASE("colength agrees with degreewise count through n = 6") {
        for (int n = 1; n <= 6; ++n) {
            std::vector<VecPoly> g;
            for (const Poly& q : m1.power(n)) g.push_back({q});
            GroebnerBasis gb = A1->gb_over_quotient(1, g);
            HilbertSeries hs = hilbert_series_of_quotient(gb, {0});
            auto hf = hs.hilbert_function(0, 12);
            int64_t sum = 0;
            for (auto v : hf) sum += v;
            CHECK(sum == m1.colength(n));
        }
    }
}

TEST_CASE("quotient by a regular element") {
    auto A1 = make_a1();
    auto P1 = A1->ambient();
    SUBCASE("A1/(x) is the dim-0 hypersurface k[z]/(z^2)") {
        QuotientMap qm = quotient_by_regular_element(A1, parse_poly(P1, "x"));
        CHECK(qm.target->dim() == 0);
        CHECK(qm.target->codim() == 1);
        CHECK(qm.target->ambient()->nvars() == 1);
        // x maps to zero, z survives
        CHECK(qm.apply(parse_poly(P1, "x")).is_zero());
        CHECK_FALSE(qm.apply(parse_poly(P1, "z")).is_zero());
        CHECK(qm.apply(parse_poly(P1, "z^2")).is_zero());
    }
    SUBCASE("z is not regular on A1") {
        CHECK_THROWS_AS(quotient_by_regular_element(A1, parse_poly(P1, "z")),
                        RegularSequenceError);
    }
    SUBCASE("degree-2 element joins the defining sequence") {
        auto P = Ring::make(101, {"x", "y", "z"});
        auto A = CIRing::make(P, {parse_poly(P, "z^2")});
        QuotientMap qm = quotient_by_regular_element(A, parse_poly(P, "x^2 + y^2"));
        CHECK(qm.target->codim() == 2);
        CHECK(qm.target->dim() == 1);
    }
    SUBCASE("linear combination substitution") {
        auto P = Ring::make(101, {"x", "y", "z"});
        auto A = CIRing::make(P, {parse_poly(P, "z^2")});
        QuotientMap qm = quotient_by_regular_element(A, parse_poly(P, "x - y"));
        CHECK(qm.target->dim() == 1);
        CHECK(qm.apply(parse_poly(P, "x - y")).is_zero());
        CHECK(qm.apply(parse_poly(P, "x")) == qm.apply(parse_poly(P, "y")));
    }
}
