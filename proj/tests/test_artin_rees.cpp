#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cicalc/artin_rees.hpp"

using namespace cicalc;

namespace {

struct Fix {
    CIRingPtr A1;
    ModulePresentation M1, freeA1;
    IdealPtr m1, j1;

    Fix() {
        auto P1 = Ring::make(101, {"x", "z"});
        A1 = CIRing::make(P1, {parse_poly(P1, "z^2")});
        M1 = ModulePresentation::cyclic(A1, {parse_poly(P1, "z")});
        freeA1 = ModulePresentation::free_module(A1);
        m1 = irrelevant_ideal(A1);
        j1 = std::make_shared<IdealData>(A1, std::vector<Poly>{parse_poly(P1, "x")});
    }
};

}  // namespace

TEST_CASE("syzygy filtrations") {
    Fix f;
    FreeResolution res = minimal_resolution(f.M1, 4);
    SUBCASE("principal-ideal filtration is stable immediately") {
        SyzygyFiltration filt = syzygy_filtration(res, *f.j1, 1, 6);
        CHECK(filt.stable);
        CHECK(filt.stability_index <= 1);
        CHECK(filt.exactness_checked);
        // N_n = (x^n z): each graded piece has length 1
        for (int64_t l : filt.graded_lengths) CHECK(l == 1);
    }
    SUBCASE("maximal-ideal filtration") {
        SyzygyFiltration filt = syzygy_filtration(res, *f.m1, 1, 6);
        CHECK(filt.stable);
        CHECK(filt.exactness_checked);
    }
    SUBCASE("free module has the zero filtration") {
        FreeResolution fres = minimal_resolution(f.freeA1, 3);
        SyzygyFiltration filt = syzygy_filtration(fres, *f.m1, 1, 4);
        for (const auto& piece : filt.pieces) CHECK(piece.empty());
        for (int64_t l : filt.graded_lengths) CHECK(l == 0);
    }
}

TEST_CASE("strong artin-rees exponents") {
    Fix f;
    SUBCASE("periodic module against the parameter ideal") {
        SweepReport sweep = reg_syzygy_sweep(f.M1, *f.j1, 4);
        ARReport rep = strong_ar_exponent(f.M1, *f.j1, 4, 6, &sweep);
        CHECK(rep.hypothesis_verified);
        CHECK(rep.h <= 1);
        CHECK(rep.cross_check_ok);
        for (int h : rep.h_per_level) CHECK(h <= 1);
    }
    SUBCASE("free module has exponent zero") {
        SweepReport sweep = reg_syzygy_sweep(f.freeA1, *f.m1, 3);
        ARReport rep = strong_ar_exponent(f.freeA1, *f.m1, 3, 5, &sweep);
        CHECK(rep.h == 0);
        CHECK(rep.cross_check_ok);
    }
    SUBCASE("periodic module against the maximal ideal") {
        SweepReport sweep = reg_syzygy_sweep(f.M1, *f.m1, 4);
        ARReport rep = strong_ar_exponent(f.M1, *f.m1, 4, 6, &sweep);
        CHECK(rep.hypothesis_verified);
        CHECK(rep.h <= rep.n_max);
        CHECK(rep.cross_check_ok);
    }
}

TEST_CASE("independent verification") {
    Fix f;
    SweepReport sweep = reg_syzygy_sweep(f.M1, *f.j1, 4);
    ARReport rep = strong_ar_exponent(f.M1, *f.j1, 4, 6, &sweep);
    SUBCASE("the found exponent verifies") {
        ARVerification v = verify_ar(f.M1, *f.j1, rep.h, 4, 6);
        CHECK(v.holds);
        CHECK_FALSE(v.vacuous);
    }
    SUBCASE("vacuous window flagged") {
        ARVerification v = verify_ar(f.M1, *f.j1, 6, 2, 6);
        CHECK(v.vacuous);
    }
    SUBCASE("minimality witness: h-1 fails when h > 0") {
        if (rep.h > 0) {
            ARVerification v = verify_ar(f.M1, *f.j1, rep.h - 1, 4, 6);
            CHECK_FALSE(v.holds);
        }
    }
}

TEST_CASE("exponent is independent of the minimal resolution") {
    Fix f;
    for (IdealPtr I : {f.j1, f.m1}) {
        ARReport a = strong_ar_exponent(f.M1, *I, 3, 6, nullptr, ModOrder{MonoOrder::degrevlex});
        ARReport b = strong_ar_exponent(f.M1, *I, 3, 6, nullptr, ModOrder{MonoOrder::lex});
        CHECK(a.h_per_level == b.h_per_level);
    }
}
