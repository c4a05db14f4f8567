#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cicalc/operators.hpp"

using namespace cicalc;

namespace {

struct Fix {
    CIRingPtr A1, A2;
    ModulePresentation M1, M2, kA1, kA2;
    IdealPtr m1, j1, m2;

    Fix() {
        auto P1 = Ring::make(101, {"x", "z"});
        A1 = CIRing::make(P1, {parse_poly(P1, "z^2")});
        M1 = ModulePresentation::cyclic(A1, {parse_poly(P1, "z")});
        kA1 = ModulePresentation::residue_field(A1);
        m1 = irrelevant_ideal(A1);
        j1 = std::make_shared<IdealData>(A1, std::vector<Poly>{parse_poly(P1, "x")});
        auto P2 = Ring::make(101, {"x", "z1", "z2"});
        A2 = CIRing::make(P2, {parse_poly(P2, "z1^2"), parse_poly(P2, "z2^2")});
        M2 = ModulePresentation::cyclic(A2, {parse_poly(P2, "z1")});
        kA2 = ModulePresentation::residue_field(A2);
        m2 = irrelevant_ideal(A2);
    }
};

}  // namespace

TEST_CASE("operator construction on the periodic module") {
    Fix f;
    FreeResolution res = minimal_resolution(f.M1, 6);
    OperatorSet ops = eisenbud_operators(res);  // verify() runs inside
    // d~^2 = z^2 = 1.f1, so t1 = (1) at every stage
    auto P = f.A1->ambient();
    for (int i = 2; i <= 6; ++i) {
        REQUIRE(ops.t[0][size_t(i)].size() == 1);
        CHECK(ops.t[0][size_t(i)][0][0] == Poly::constant(P, 1));
    }
    ExtSModule E = ext_k_module(res, ops);
    for (int i = 0; i + 2 <= 6; ++i) {
        CHECK(E.piece_dim[size_t(i)] == 1);
        CHECK(E.action[0][size_t(i)].at(0, 0) != 0);  // isomorphism on each piece
    }
    CHECK(E.generation_degree == 1);  // generators in homological degrees 0 and 1
}

TEST_CASE("operators vanish on a free module") {
    Fix f;
    FreeResolution res = minimal_resolution(ModulePresentation::free_module(f.A1), 5);
    OperatorSet ops = eisenbud_operators(res);
    for (int i = 2; i <= 5; ++i) CHECK(ops.t[0][size_t(i)].empty());
    ExtSModule E = ext_k_module(res, ops);
    for (int i = 1; i <= 5; ++i) CHECK(E.piece_dim[size_t(i)] == 0);
}

TEST_CASE("operators on the residue field of the codimension-2 ring") {
    Fix f;
    FreeResolution res = minimal_resolution(f.kA2, 8);
    OperatorSet ops = eisenbud_operators(res);  // identities + commutation verified
    ExtSModule E = ext_k_module(res, ops);
    std::vector<int> expect = {1, 3, 5, 7, 9, 11, 13, 15, 17};
    for (int i = 0; i <= 8; ++i) CHECK(E.piece_dim[size_t(i)] == expect[size_t(i)]);
}

TEST_CASE("support varieties on fixtures") {
    Fix f;
    SUBCASE("periodic module: zero annihilator, the full line") {
        VarietyIdeal v = support_variety(f.M1);
        CHECK_FALSE(v.inconclusive);
        CHECK(v.gens.empty());
        CHECK(v.dim == 1);
    }
    SUBCASE("free module: irrelevant ideal, the origin") {
        VarietyIdeal v = support_variety(ModulePresentation::free_module(f.A1));
        CHECK(v.dim == 0);
        REQUIRE(v.gens.size() == 1);
        CHECK(v.gens[0] == Poly::variable(v.S, 0));
    }
    SUBCASE("M2 over the codimension-2 ring: one coordinate axis") {
        VarietyIdeal v = support_variety(f.M2);
        CHECK(v.dim == 1);
        REQUIRE(v.gens.size() == 1);
        CHECK(v.gens[0] == Poly::variable(v.S, 1));  // t2 kills Ext
    }
    SUBCASE("residue field over A2: everything") {
        VarietyIdeal v = support_variety(f.kA2);
        CHECK(v.dim == 2);
        CHECK(v.gens.empty());
    }
}

TEST_CASE("complexity agrees between variety dimension and betti growth") {
    Fix f;
    SUBCASE("cx k = 2 over the codimension-2 ring") {
        ComplexityReport r = complexity(f.kA2);
        CHECK(r.value == 2);
        CHECK(r.agreed);
    }
    SUBCASE("free module has complexity 0") {
        ComplexityReport r = complexity(ModulePresentation::free_module(f.A1));
        CHECK(r.value == 0);
        CHECK(r.agreed);
    }
    SUBCASE("periodic module has complexity 1") {
        ComplexityReport r = complexity(f.M1);
        CHECK(r.value == 1);
        CHECK(r.agreed);
    }
}

TEST_CASE("stable ideal varieties") {
    Fix f;
    SUBCASE("parameter ideal: every power has the origin as variety") {
        IdealVarietyFamily fam = stable_ideal_variety(*f.j1, 4);
        CHECK(fam.stabilized);
        CHECK(fam.stable.stabilization_index == 1);
        CHECK(fam.stable.dim == 0);
        for (const auto& v : fam.per_power) CHECK(v.dim == 0);
        VarietyIdeal tot = total_ideal_variety(*f.j1, 4);
        CHECK(tot.dim == 0);
    }
    SUBCASE("irrelevant maximal ideal of the hypersurface: the full line") {
        IdealVarietyFamily fam = stable_ideal_variety(*f.m1, 4);
        CHECK(fam.stabilized);
        CHECK(fam.stable.stabilization_index == 1);
        CHECK(fam.stable.dim == 1);
        CHECK(fam.stable.gens.empty());
        VarietyIdeal tot = total_ideal_variety(*f.m1, 4);
        CHECK(tot.dim == 1);
    }
}

TEST_CASE("radical machinery") {
    Fix f;
    RingPtr S = operator_ring(f.A2);
    Poly t1 = Poly::variable(S, 0), t2 = Poly::variable(S, 1);
    CHECK(in_radical(S, t1, {t1 * t1}));
    CHECK_FALSE(in_radical(S, t2, {t1 * t1}));
    CHECK(radical_equal(S, {t1 * t1, t1 * t2}, {t1}));
    CHECK_FALSE(radical_equal(S, {t1}, {t2}));
    CHECK(ideal_quotient_dim(S, {t1}) == 1);
    CHECK(ideal_quotient_dim(S, {}) == 2);
    CHECK(ideal_quotient_dim(S, {t1, t2}) == 0);
}

TEST_CASE("pair varieties against the residue field") {
    Fix f;
    SUBCASE("V(M, k) matches V(M) and the sum rule holds") {
        VarietyIdeal vm = support_variety(f.M1);
        VarietyIdeal vpair = support_variety_pair(f.M1, f.kA1);
        CHECK(ideal_equal(vm.S, vm.gens, vpair.gens));
        VarietyIdeal vk = support_variety(f.kA1);
        auto sum = ideal_sum(vm.S, vm.gens, vk.gens);
        CHECK(radical_equal(vm.S, vpair.gens, sum));
    }
    SUBCASE("same over the codimension-2 ring") {
        VarietyIdeal vm = support_variety(f.M2);
        VarietyIdeal vpair = support_variety_pair(f.M2, f.kA2);
        CHECK(ideal_equal(vm.S, vm.gens, vpair.gens));
        VarietyIdeal vk = support_variety(f.kA2);
        auto sum = ideal_sum(vm.S, vm.gens, vk.gens);
        CHECK(radical_equal(vm.S, vpair.gens, sum));
    }
}

TEST_CASE("variety is a syzygy invariant") {
    Fix f;
    for (const ModulePresentation* M : {&f.M1, &f.M2}) {
        FreeResolution res = minimal_resolution(*M, 4);
        VarietyIdeal v0 = support_variety(*M);
        VarietyIdeal v1 = support_variety(res.syzygy_module(1));
        CHECK(radical_equal(v0.S, v0.gens, v1.gens));
    }
}

TEST_CASE("variety invariance under a degree-1 regular quotient") {
    Fix f;
    SUBCASE("hypersurface") {
        auto P = f.A1->ambient();
        QuotientMap qm = quotient_by_regular_element(f.A1, parse_poly(P, "x"));
        ModulePresentation Mq = f.M1.transport(qm);
        VarietyIdeal va = support_variety(f.M1);
        VarietyIdeal vb = support_variety(Mq);
        CHECK(va.gens.size() == vb.gens.size());
        for (size_t i = 0; i < va.gens.size(); ++i) CHECK(va.gens[i].str() == vb.gens[i].str());
        CHECK(va.dim == vb.dim);
    }
    SUBCASE("codimension two") {
        auto P = f.A2->ambient();
        QuotientMap qm = quotient_by_regular_element(f.A2, parse_poly(P, "x"));
        ModulePresentation Mq = f.M2.transport(qm);
        VarietyIdeal va = support_variety(f.M2);
        VarietyIdeal vb = support_variety(Mq);
        REQUIRE(va.gens.size() == vb.gens.size());
        for (size_t i = 0; i < va.gens.size(); ++i) CHECK(va.gens[i].str() == vb.gens[i].str());
    }
}

TEST_CASE("complexity reduction") {
    Fix f;
    SUBCASE("reduces the residue field of the codimension-2 ring") {
        ComplexityReduction red = reduce_complexity(f.kA2, 10, /*seed=*/7);
        ComplexityReport rk = complexity(f.kA2);
        REQUIRE(rk.value == 2);
        ComplexityReport rK = complexity(red.K);
        CHECK(rK.value == 1);
        CHECK(rK.agreed);
        CHECK(red.syzygy_step_verified);
        for (int b : red.betti_differences) CHECK(b >= 0);
    }
    SUBCASE("complexity 1 input is rejected") {
        CHECK_THROWS_AS(reduce_complexity(f.M1, 8, 7), ComplexityTooLowError);
    }
    SUBCASE("complexity 0 input is rejected") {
        CHECK_THROWS_AS(reduce_complexity(ModulePresentation::free_module(f.A1), 8, 7),
                        ComplexityTooLowError);
    }
}
