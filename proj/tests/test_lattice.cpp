#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3disc/lattice.hpp"
#include "oracles.hpp"

using namespace k3disc;

TEST_CASE("inner product basics") {
    Lattice u = hyperbolic_plane();
    CHECK(u.inner(IntVec{1, 0}, IntVec{0, 1}) == 1);
    CHECK(u.inner(IntVec{3, -2}, IntVec{0, 0}) == 0);
    Lattice e8m = e8_minus();
    IntVec root(8, Int(0));
    root[0] = 1;  // basis vectors are roots
    CHECK(e8m.inner(root, root) == -2);
    CHECK_THROWS_AS(u.inner(IntVec{1}, IntVec{0, 1}), std::invalid_argument);
}

TEST_CASE("inner is symmetric and bilinear (randomized)") {
    oracles::Rng rng(101);
    for (int it = 0; it < 40; ++it) {
        int n = rng.uniform(1, 5);
        Lattice l(oracles::random_symmetric_nondegenerate(rng, n, 6), "rand");
        IntVec x(n), y(n), z(n);
        for (int i = 0; i < n; ++i) {
            x[i] = rng.uniform(-4, 4);
            y[i] = rng.uniform(-4, 4);
            z[i] = rng.uniform(-4, 4);
        }
        Int a = rng.uniform(-3, 3), b = rng.uniform(-3, 3);
        CHECK(l.inner(x, y) == l.inner(y, x));
        IntVec comb(n);
        for (int i = 0; i < n; ++i) comb[i] = a * y[i] + b * z[i];
        CHECK(l.inner(x, comb) == a * l.inner(x, y) + b * l.inner(x, z));
    }
}

TEST_CASE("signatures of the standard lattices") {
    CHECK(signature(k3_lattice()) == Signature{3, 19});
    CHECK(signature(hyperbolic_plane()) == Signature{1, 1});
    CHECK(signature(e8_minus()) == Signature{0, 8});
    auto [p, q] = oracles::signature_oracle(e8_minus().gram());
    CHECK(p == 0);
    CHECK(q == 8);
}

TEST_CASE("signature matches the characteristic-polynomial oracle") {
    oracles::Rng rng(55);
    for (int it = 0; it < 50; ++it) {
        int n = rng.uniform(1, 6);
        IntMat g = oracles::random_symmetric_nondegenerate(rng, n, 7);
        Signature s = signature(Lattice(g, "rand"));
        auto [p, q] = oracles::signature_oracle(g);
        CHECK(s.p == p);
        CHECK(s.q == q);
    }
}

TEST_CASE("signature is invariant under unimodular basis change") {
    oracles::Rng rng(56);
    for (int it = 0; it < 30; ++it) {
        int n = rng.uniform(1, 5);
        IntMat g = oracles::random_symmetric_nondegenerate(rng, n, 6);
        Signature before = signature(Lattice(g, "g"));
        IntMat u = oracles::random_unimodular(rng, n, 12);
        IntMat conj = mul(mul(transpose(u), g), u);
        CHECK(signature(Lattice(conj, "g'")) == before);
    }
}

TEST_CASE("determinants") {
    CHECK(determinant(k3_lattice()) == -1);
    CHECK(determinant(hyperbolic_plane_scaled(2)) == -4);
    CHECK(determinant(rank_one(6)) == 6);
    CHECK(determinant(e8_minus()) == 1);
}

TEST_CASE("discriminant groups") {
    CHECK(discriminant_group(k3_lattice()).cyclic_orders.empty());
    CHECK(discriminant_group(k3_lattice()).exponent() == 1);
    DiscriminantGroup u2 = discriminant_group(hyperbolic_plane_scaled(2));
    CHECK(u2.cyclic_orders == IntVec{2, 2});
    CHECK(u2.exponent() == 2);
    DiscriminantGroup r = discriminant_group(rank_one(6));
    CHECK(r.cyclic_orders == IntVec{6});
    CHECK(r.order() == 6);
}

TEST_CASE("discriminant group order equals |det| (randomized)") {
    oracles::Rng rng(77);
    for (int it = 0; it < 50; ++it) {
        int n = rng.uniform(1, 5);
        Lattice l(oracles::random_symmetric_nondegenerate(rng, n, 8), "rand");
        CHECK(discriminant_group(l).order() == abs(determinant(l)));
    }
}

TEST_CASE("constructors and rescaling") {
    Lattice uu = direct_sum(hyperbolic_plane(), hyperbolic_plane());
    CHECK(uu.rank() == 4);
    CHECK(signature(uu) == Signature{2, 2});

    Lattice u2 = hyperbolic_plane_scaled(2);
    CHECK(u2.norm(IntVec{1, 1}) == 4);  // Q(x,y) = 4xy
    CHECK(u2.is_even());

    Lattice k3 = k3_lattice();
    CHECK(k3.rank() == 22);
    CHECK(k3.is_even());
    CHECK(determinant(k3) == -1);

    CHECK_THROWS_AS(rank_one(3), std::invalid_argument);
    CHECK_THROWS_AS(rank_one(0), std::invalid_argument);
    CHECK_THROWS_AS(rescale(hyperbolic_plane(), 0), std::invalid_argument);
}

TEST_CASE("degenerate Gram matrices are rejected") {
    IntMat z(2, 2);
    CHECK_THROWS_AS(Lattice(z, "zero"), std::invalid_argument);
    IntMat asym(2, 2);
    asym.at(0, 1) = 1;
    CHECK_THROWS_AS(Lattice(asym, "asym"), std::invalid_argument);
}
