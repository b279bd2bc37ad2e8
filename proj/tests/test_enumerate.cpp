#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "k3disc/enumerate.hpp"
#include "oracles.hpp"

using namespace k3disc;

TEST_CASE("E8(-1) has 240 roots") {
    auto roots = definite_enumerate({e8_minus(), -2, -2, std::nullopt, false});
    CHECK(roots.size() == 240);
    for (const auto& v : roots) CHECK(e8_minus().norm(v) == -2);
    auto up_to_sign = definite_enumerate({e8_minus(), -2, -2, std::nullopt, true});
    CHECK(up_to_sign.size() == 120);
}

TEST_CASE("small definite enumerations") {
    CHECK(definite_enumerate({rank_one(-4), -2, -2, std::nullopt, false}).empty());

    Lattice d22 = direct_sum(rank_one(-2), rank_one(-2));
    auto v = definite_enumerate({d22, -2, -1, std::nullopt, false});
    CHECK(v.size() == 4);  // (+-1, 0), (0, +-1)
    std::set<IntVec> s(v.begin(), v.end());
    CHECK(s.count(IntVec{1, 0}) == 1);
    CHECK(s.count(IntVec{0, -1}) == 1);

    // range includes zero
    auto with_zero = definite_enumerate({d22, -2, 0, std::nullopt, false});
    CHECK(with_zero.size() == 5);

    CHECK_THROWS_AS(definite_enumerate({hyperbolic_plane(), -2, -2, std::nullopt, false}),
                    std::invalid_argument);
    CHECK_THROWS_AS(definite_enumerate({rank_one(-2), -1, -2, std::nullopt, false}),
                    std::invalid_argument);
}

TEST_CASE("enumeration agrees with the naive box oracle") {
    oracles::Rng rng(2024);
    for (int it = 0; it < 50; ++it) {
        int n = rng.uniform(1, 4);
        Lattice l(oracles::random_negative_definite_even(rng, n, 4), "nd");
        Int lo = -rng.uniform(1, 12);
        auto fast = definite_enumerate({l, lo, 0, std::nullopt, false});
        auto slow = oracles::naive_definite_enumerate(l, lo, 0);
        CHECK(fast == slow);
    }
}

TEST_CASE("enumeration output is symmetric under negation") {
    oracles::Rng rng(17);
    for (int it = 0; it < 20; ++it) {
        int n = rng.uniform(1, 4);
        Lattice l(oracles::random_negative_definite_even(rng, n, 4), "nd");
        auto vecs = definite_enumerate({l, -10, -1, std::nullopt, false});
        std::set<IntVec> s(vecs.begin(), vecs.end());
        for (const auto& v : vecs) CHECK(s.count(negated(v)) == 1);
    }
}

TEST_CASE("shifted enumeration") {
    // coset (1/2, 1/2) + Z^2 in <-2> + <-2>: norms -2(x+1/2)^2 - 2(y+1/2)^2
    Lattice d22 = direct_sum(rank_one(-2), rank_one(-2));
    RatVec shift{Rat(1, 2), Rat(1, 2)};
    auto hits = definite_enumerate({d22, -1, -1, shift, false});
    CHECK(hits.size() == 4);  // x, y in {0, -1}
    for (const auto& x : hits) {
        RatVec v{Rat(x[0]) + Rat(1, 2), Rat(x[1]) + Rat(1, 2)};
        CHECK(d22.norm(v) == Rat(-1));
    }
    // empty coset result is a certified non-existence
    CHECK(definite_enumerate({d22, -2, -2, shift, false}).empty());
}

TEST_CASE("mod obstructions") {
    Lattice u2u2 = direct_sum(hyperbolic_plane_scaled(2), hyperbolic_plane_scaled(2));
    auto o = mod_obstruction(u2u2, -2, {Int(4)});
    REQUIRE(o.has_value());
    CHECK(o->kind == "mod");
    CHECK(o->modulus == 4);
    CHECK(o->residue == 2);

    Lattice u = hyperbolic_plane();
    CHECK_FALSE(mod_obstruction(u, -2, {Int(4), Int(8), Int(9)}).has_value());

    Lattice pm4 = direct_sum(rank_one(4), rank_one(-4));
    auto o2 = mod_obstruction(pm4, -2, {Int(4)});
    REQUIRE(o2.has_value());
    CHECK(o2->modulus == 4);

    CHECK_THROWS_AS(mod_obstruction(u, -2, {Int(1)}), std::invalid_argument);
}

TEST_CASE("mod obstruction soundness smoke test") {
    // whenever an obstruction is reported, random sampling finds nothing
    oracles::Rng rng(909);
    SearchParams params;
    for (int it = 0; it < 20; ++it) {
        int n = rng.uniform(2, 4);
        Lattice l(oracles::random_symmetric_nondegenerate(rng, n, 5), "rand");
        Int target = rng.uniform(-8, 8);
        auto o = mod_obstruction(l, target, default_moduli(l), params);
        if (!o) continue;
        for (int trial = 0; trial < 10000; ++trial) {
            IntVec v(n);
            for (int i = 0; i < n; ++i) v[i] = rng.uniform(-9, 9);
            CHECK(l.norm(v) != target);
        }
    }
}

TEST_CASE("bounded indefinite search") {
    Lattice u = hyperbolic_plane();
    Verdict3 v = bounded_indefinite_search(u, -2, 1);
    REQUIRE(v.tag == Tag::yes);
    CHECK(*v.witness == IntVec{1, -1});

    Lattice u2u2 = direct_sum(hyperbolic_plane_scaled(2), hyperbolic_plane_scaled(2));
    Verdict3 unk = bounded_indefinite_search(u2u2, -2, 10);
    CHECK(unk.tag == Tag::unknown);
    CHECK(*unk.bound == 10);

    Lattice mix = direct_sum(rank_one(2), rank_one(-6));
    Verdict3 w = bounded_indefinite_search(mix, -4, 2);
    REQUIRE(w.tag == Tag::yes);
    CHECK(*w.witness == IntVec{1, 1});
}

TEST_CASE("coset bounded search stays in the coset") {
    Lattice u = hyperbolic_plane();
    IntVec w0{1, 1};
    Verdict3 v = coset_bounded_search(u, w0, 2, 2, 3);  // w = (1,1) mod 2, w^2 = 2
    REQUIRE(v.tag == Tag::yes);
    CHECK((*v.witness)[0] % 2 != 0);
    CHECK(u.norm(*v.witness) == 2);
}

TEST_CASE("representation trichotomy") {
    SearchParams params;
    Lattice u = hyperbolic_plane();
    CHECK(represents_trichotomy(u, -2, params).tag == Tag::yes);

    Lattice u2u2 = direct_sum(hyperbolic_plane_scaled(2), hyperbolic_plane_scaled(2));
    Verdict3 no = represents_trichotomy(u2u2, -2, params);
    CHECK(no.tag == Tag::no);
    CHECK(no.obstruction->kind == "mod");

    // definite branch is decisive
    CHECK(represents_trichotomy(e8_minus(), -2, params).tag == Tag::yes);
    CHECK(represents_trichotomy(e8_minus(), -3, params).tag == Tag::no);
    CHECK(represents_trichotomy(e8_minus(), 2, params).tag == Tag::no);
}

TEST_CASE("isotropic rank-2 search") {
    Lattice uu = direct_sum(hyperbolic_plane(), hyperbolic_plane());
    Verdict3 v = isotropic_rank2_search(uu, 1);
    REQUIRE(v.tag == Tag::yes);
    auto [a, b] = *v.witness_pair;
    CHECK(uu.norm(a) == 0);
    CHECK(uu.norm(b) == 0);
    CHECK(uu.inner(a, b) == 0);

    Lattice r2 = direct_sum(rank_one(2), rank_one(-4));
    CHECK(isotropic_rank2_search(r2, 5).tag == Tag::no);

    Lattice u2u2 = direct_sum(hyperbolic_plane_scaled(2), hyperbolic_plane_scaled(2));
    CHECK(isotropic_rank2_search(u2u2, 1).tag == Tag::yes);

    // signature (2,2) with no isotropic vector in the box stays honest:
    // x^2 + y^2 = 7(z^2 + w^2) forces x, y divisible by 7
    Lattice tough = direct_sum(direct_sum(rank_one(2), rank_one(2)),
                               direct_sum(rank_one(-14), rank_one(-14)));
    CHECK(isotropic_rank2_search(tough, 2).tag == Tag::unknown);
}
