#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cicalc/groebner.hpp"
#include "cicalc/hilbert.hpp"

using namespace cicalc;

namespace {

RingPtr ring_xz() { return Ring::make(101, {"x", "z"}); }

std::vector<VecPoly> as_ideal(RingPtr r, const std::vector<std::string>& gens) {
    std::vector<VecPoly> out;
    for (const auto& g : gens) out.push_back({parse_poly(r, g)});
    return out;
}

// all monomials of given total degree in the ring's variables
std::vector<Expvec> monomials_of_degree(const Ring& r, int d) {
    std::vector<Expvec> out;
    if (r.nvars() == 2) {
        for (int a = 0; a <= d; ++a) {
            Expvec m;
            m.e[0] = uint16_t(a);
            m.e[1] = uint16_t(d - a);
            out.push_back(m);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    PrimeField F(101);
    CHECK(F.add(100, 2) == 1);
    CHECK(F.sub(1, 2) == 100);
    CHECK(F.mul(50, 50) == 2500 % 101);
    for (uint32_t a = 1; a < 101; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK_THROWS_AS(PrimeField(100), StructuralError);
    CHECK_THROWS_AS(PrimeField(2), StructuralError);
}

TEST_CASE("poly parse and arithmetic") {
    auto r = ring_xz();
    Poly p = parse_poly(r, "x^2 + 2*x*z - z^2");
    CHECK(p.degree() == 2);
    CHECK(p.is_homogeneous());
    Poly q = parse_poly(r, "x - z");
    Poly prod = p * q;
    CHECK(prod == parse_poly(r, "x^3 + x^2 z - 3 x z^2 + z^3"));
    CHECK((p - p).is_zero());
    CHECK(parse_poly(r, "102") == Poly::constant(r, 1));
    CHECK_THROWS(parse_poly(r, "y + 1"));
}

TEST_CASE("groebner basis of monomial ideals is the generating set") {
    auto r = ring_xz();
    auto gb = groebner(r, 1, as_ideal(r, {"x^2", "x*z"}));
    CHECK(gb.elements().size() == 2);
    CHECK(gb.contains({parse_poly(r, "x^2")}));
    CHECK(gb.contains({parse_poly(r, "x^3 + x^2 z")}));
    CHECK_FALSE(gb.contains({parse_poly(r, "z^2")}));
}

TEST_CASE("groebner prunes duplicate and zero generators") {
    auto r = ring_xz();
    // x*z^2 - z^2*x is identically zero
    std::vector<VecPoly> gens = {{parse_poly(r, "z^2")},
                                 {parse_poly(r, "x z^2") - parse_poly(r, "z^2") * parse_poly(r, "x")}};
    auto gb = groebner(r, 1, gens);
    REQUIRE(gb.elements().size() == 1);
    auto vecs = gb.element_vectors();
    CHECK(vecs[0][0] == parse_poly(r, "z^2"));
}

TEST_CASE("groebner of (x,z)^3 equals the four cubic monomials") {
    auto r = ring_xz();
    // oracle: enumerate the cubics by brute force
    std::vector<Expvec> cubics = monomials_of_degree(*r, 3);
    REQUIRE(cubics.size() == 4);
    auto gb = groebner(r, 1, as_ideal(r, {"x^3", "x^2 z", "x z^2", "z^3"}));
    CHECK(gb.elements().size() == 4);
    for (const Expvec& m : cubics) CHECK(gb.contains({Poly::monomial(r, m, 1)}));
    // and the ideal contains nothing of degree 2
    for (const Expvec& m : monomials_of_degree(*r, 2))
        CHECK_FALSE(gb.contains({Poly::monomial(r, m, 1)}));
}

TEST_CASE("groebner is idempotent") {
    auto r = ring_xz();
    auto gb1 = groebner(r, 1, as_ideal(r, {"x^2 + z^2", "x z"}));
    auto vecs = gb1.element_vectors();
    auto gb2 = groebner(r, 1, vecs);
    CHECK(gb1.elements().size() == gb2.elements().size());
    auto v2 = gb2.element_vectors();
    for (size_t i = 0; i < vecs.size(); ++i) CHECK(vecs[i][0] == v2[i][0]);
}

TEST_CASE("normal forms") {
    auto r = ring_xz();
    auto m2 = groebner(r, 1, as_ideal(r, {"x^2", "x z", "z^2"}));
    CHECK(m2.normal_form(VecPoly{parse_poly(r, "x^3")})[0].is_zero());
    auto z2 = groebner(r, 1, as_ideal(r, {"z^2"}));
    CHECK(z2.normal_form(VecPoly{parse_poly(r, "z")})[0] == parse_poly(r, "z"));
    CHECK(z2.normal_form(VecPoly{parse_poly(r, "x^2 + z^2")})[0] == parse_poly(r, "x^2"));
}

TEST_CASE("syzygies: koszul relation, regular element, product check") {
    auto r = ring_xz();
    SUBCASE("gens {x,z} have the single Koszul syzygy") {
        auto syz = syzygies_mod(r, 1, as_ideal(r, {"x", "z"}), {});
        REQUIRE(syz.size() == 1);
        // (z, -x) up to scalar
        const VecPoly& s = syz[0];
        Poly cross = s[0] * parse_poly(r, "x") + s[1] * parse_poly(r, "z");
        CHECK(cross.is_zero());
        CHECK_FALSE(s[0].is_zero());
    }
    SUBCASE("a nonzerodivisor has no syzygies") {
        auto syz = syzygies_mod(r, 1, as_ideal(r, {"z^2"}), {});
        CHECK(syz.empty());
    }
    SUBCASE("syzygies of (x,z)^2 compose to zero") {
        auto gens = as_ideal(r, {"x^2", "x z", "z^2"});
        auto syz = syzygies_mod(r, 1, gens, {});
        CHECK(syz.size() >= 2);
        for (const VecPoly& s : syz) {
            Poly acc = Poly::zero(r);
            for (size_t l = 0; l < gens.size(); ++l) acc = acc + s[l] * gens[l][0];
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("colon by an element") {
    auto r = ring_xz();
    auto amb = standard_basis(r, 1);
    SUBCASE("(x^2) : x = (x)") {
        auto c = colon_element(r, 1, as_ideal(r, {"x^2"}), parse_poly(r, "x"), amb);
        CHECK(submodules_equal(r, 1, c, as_ideal(r, {"x"})));
    }
    SUBCASE("(z^2) : z = (z)") {
        auto c = colon_element(r, 1, as_ideal(r, {"z^2"}), parse_poly(r, "z"), amb);
        CHECK(submodules_equal(r, 1, c, as_ideal(r, {"z"})));
    }
    SUBCASE("(x,z)^3 : x = (x,z)^2, oracle by exponent subtraction") {
        auto cube = as_ideal(r, {"x^3", "x^2 z", "x z^2", "z^3"});
        auto c = colon_element(r, 1, cube, parse_poly(r, "x"), amb);
        // oracle: monomial colon of the degree-3 monomials by x
        std::vector<VecPoly> expected;
        for (const Expvec& m : monomials_of_degree(*r, 3)) {
            Expvec q = m;
            if (q.e[0] > 0) --q.e[0];
            expected.push_back({Poly::monomial(r, q, 1)});
        }
        CHECK(submodules_equal(r, 1, c, expected));
        CHECK(submodules_equal(r, 1, c, as_ideal(r, {"x^2", "x z", "z^2"})));
    }
    SUBCASE("containment g * colon(U, g) inside U") {
        auto U = as_ideal(r, {"x^3 + z^3", "x z^2"});
        Poly g = parse_poly(r, "x + z");
        auto c = colon_element(r, 1, U, g, amb);
        auto gu = groebner(r, 1, U);
        for (const VecPoly& v : c) CHECK(gu.contains(vec_scale(v, g)));
    }
}

TEST_CASE("intersections") {
    auto r = ring_xz();
    SUBCASE("(x) cap (z) = (xz)") {
        auto got = intersect_submodules(r, 1, as_ideal(r, {"x"}), as_ideal(r, {"z"}));
        CHECK(submodules_equal(r, 1, got, as_ideal(r, {"x z"})));
    }
    SUBCASE("U cap U = U") {
        auto U = as_ideal(r, {"x^2 + z^2", "x z"});
        auto got = intersect_submodules(r, 1, U, U);
        CHECK(submodules_equal(r, 1, got, U));
    }
    SUBCASE("(x,z)^2 cap (z) = (xz, z^2), lcm oracle") {
        auto got = intersect_submodules(r, 1, as_ideal(r, {"x^2", "x z", "z^2"}),
                                        as_ideal(r, {"z"}));
        // oracle: lcm of each square monomial with z
        std::vector<VecPoly> expected;
        for (const Expvec& m : monomials_of_degree(*r, 2)) {
            Expvec zv;
            zv.e[1] = 1;
            expected.push_back({Poly::monomial(r, Expvec::lcm(m, zv), 1)});
        }
        CHECK(submodules_equal(r, 1, got, expected));
        CHECK(submodules_equal(r, 1, got, as_ideal(r, {"x z", "z^2"})));
    }
    SUBCASE("containment U cap V inside U") {
        auto U = as_ideal(r, {"x^2 + z^2"});
        auto V = as_ideal(r, {"x", "z^3"});
        auto got = intersect_submodules(r, 1, U, V);
        auto gu = groebner(r, 1, U);
        auto gv = groebner(r, 1, V);
        for (const VecPoly& v : got) {
            CHECK(gu.contains(v));
            CHECK(gv.contains(v));
        }
    }
}

TEST_CASE("hilbert series and dimensions") {
    auto r = ring_xz();
    SUBCASE("F101[x,z]/(z^2): numerator 1+s, dimension 1") {
        auto gb = groebner(r, 1, as_ideal(r, {"z^2"}));
        HilbertSeries hs = hilbert_series_of_quotient(gb, {0});
        int denom = -1;
        CHECK(hs.reduced_numerator(&denom) == IntPoly{{1, 1}});
        CHECK(denom == 1);
        CHECK(hs.dimension() == 1);
        // oracle: dimension counts degreewise 1,2,2,2,...
        auto hf = hs.hilbert_function(0, 10);
        CHECK(hf[0] == 1);
        for (int d = 1; d <= 10; ++d) CHECK(hf[size_t(d)] == 2);
    }
    SUBCASE("polynomial ring itself") {
        GroebnerBasis empty(r, 1, ModOrder{});
        HilbertSeries hs = hilbert_series_of_quotient(empty, {0});
        CHECK(hs.numerator == IntPoly::one());
        CHECK(hs.dimension() == 2);
    }
    SUBCASE("residue field: numerator (1-s)^2, dimension 0, length 1") {
        auto gb = groebner(r, 1, as_ideal(r, {"x", "z"}));
        HilbertSeries hs = hilbert_series_of_quotient(gb, {0});
        CHECK(hs.numerator == IntPoly{{1, -2, 1}});
        int denom = -1;
        CHECK(hs.reduced_numerator(&denom) == IntPoly::one());
        CHECK(denom == 0);
        CHECK(hs.dimension() == 0);
        CHECK(hs.length() == 1);
    }
    SUBCASE("brute-force monomial count agreement up to degree 8, 3 vars") {
        auto r3 = Ring::make(101, {"x", "y", "z"});
        std::vector<VecPoly> gens = {{parse_poly(r3, "x^2 y")}, {parse_poly(r3, "y z^3")},
                                     {parse_poly(r3, "z^5")}};
        auto gb = groebner(r3, 1, gens);
        HilbertSeries hs = hilbert_series_of_quotient(gb, {0});
        auto hf = hs.hilbert_function(0, 8);
        for (int d = 0; d <= 8; ++d) {
            int64_t count = 0;
            for (int a = 0; a <= d; ++a)
                for (int b = 0; a + b <= d; ++b) {
                    Expvec m;
                    m.e[0] = uint16_t(a);
                    m.e[1] = uint16_t(b);
                    m.e[2] = uint16_t(d - a - b);
                    bool in_ideal = gb.contains({Poly::monomial(r3, m, 1)});
                    if (!in_ideal) ++count;
                }
            CHECK(hf[size_t(d)] == count);
        }
    }
}

TEST_CASE("membership is order independent") {
    auto r = ring_xz();
    std::mt19937_64 rng(12345);
    auto rand_poly = [&](int deg) {
        std::vector<Term> ts;
        for (const Expvec& m : monomials_of_degree(*r, deg))
            ts.push_back({m, uint32_t(rng() % 101)});
        return Poly::from_terms(r, ts);
    };
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<VecPoly> gens;
        for (int k = 0; k < 3; ++k) gens.push_back({rand_poly(2 + int(rng() % 2))});
        auto gb_drl = groebner(r, 1, gens, ModOrder{MonoOrder::degrevlex});
        auto gb_lex = groebner(r, 1, gens, ModOrder{MonoOrder::lex});
        for (int k = 0; k < 8; ++k) {
            Poly probe = rand_poly(2 + int(rng() % 3));
            CHECK(gb_drl.contains({probe}) == gb_lex.contains({probe}));
        }
    }
}

TEST_CASE("module groebner with two components") {
    auto r = ring_xz();
    // submodule of r^2 generated by (x, z) and (z, x)
    VecPoly g1{parse_poly(r, "x"), parse_poly(r, "z")};
    VecPoly g2{parse_poly(r, "z"), parse_poly(r, "x")};
    auto gb = groebner(r, 2, {g1, g2});
    CHECK(gb.contains(vec_add(vec_scale(g1, parse_poly(r, "x+z")), g2)));
    CHECK_FALSE(gb.contains(VecPoly{parse_poly(r, "x"), Poly::zero(r)}));
    // syzygy sanity: product composes to zero
    auto syz = syzygies_mod(r, 2, {g1, g2}, {});
    for (const VecPoly& s : syz) {
        VecPoly acc = vec_add(vec_scale(g1, s[0]), vec_scale(g2, s[1]));
        CHECK(vec_is_zero(acc));
    }
}

TEST_CASE("minimal generators prunes redundancy") {
    auto r = ring_xz();
    std::vector<VecPoly> cands = as_ideal(r, {"x", "x^2", "z", "x z + z^2"});
    auto kept = minimal_generators(r, 1, cands, {}, {0});
    CHECK(kept.size() == 2);
}

TEST_CASE("division with cofactors reconstructs the input") {
    auto r = ring_xz();
    GroebnerBasis gb(r, 1, ModOrder{});
    gb.add(as_ideal(r, {"x^2 - z^2", "x z"}));
    Poly v = parse_poly(r, "x^4 + x^3 z + z^4");
    std::vector<MPoly> cofs;
    MPoly rem = gb.divide(to_mpoly(*r, gb.order(), {v}), &cofs);
    // reconstruct
    Poly acc = from_mpoly(r, 1, rem)[0];
    auto elems = gb.element_vectors();
    for (size_t k = 0; k < elems.size(); ++k) {
        Poly cof = from_mpoly(r, 1, cofs[k])[0];
        acc = acc + cof * elems[k][0];
    }
    CHECK(acc == v);
}
