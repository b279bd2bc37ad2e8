#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3disc/mat.hpp"

using namespace k3disc;

namespace {

IntMat random_matrix(std::mt19937_64& rng, int rows, int cols, int span) {
    std::uniform_int_distribution<int> d(-span, span);
    IntMat m(rows, cols);
    for (Int& x : m.a) x = d(rng);
    return m;
}

}  // namespace

TEST_CASE("determinant basics") {
    CHECK(bareiss_determinant(IntMat::identity(4)) == 1);
    IntMat u(2, 2);
    u.at(0, 1) = 1;
    u.at(1, 0) = 1;
    CHECK(bareiss_determinant(u) == -1);
    IntMat z(3, 3);
    CHECK(bareiss_determinant(z) == 0);
    CHECK(bareiss_determinant(IntMat(0, 0)) == 1);
}

TEST_CASE("determinant matches cofactor expansion on random 4x4") {
    std::mt19937_64 rng(11);
    auto cofactor_det = [](auto&& self, const IntMat& m) -> Int {
        if (m.rows == 1) return m.at(0, 0);
        Int acc = 0;
        for (int j = 0; j < m.cols; ++j) {
            IntMat minor(m.rows - 1, m.cols - 1);
            for (int r = 1; r < m.rows; ++r)
                for (int c2 = 0, c = 0; c < m.cols; ++c) {
                    if (c == j) continue;
                    minor.at(r - 1, c2++) = m.at(r, c);
                }
            Int term = m.at(0, j) * self(self, minor);
            acc += (j % 2 == 0) ? term : -term;
        }
        return acc;
    };
    for (int it = 0; it < 30; ++it) {
        IntMat m = random_matrix(rng, 4, 4, 6);
        CHECK(bareiss_determinant(m) == cofactor_det(cofactor_det, m));
    }
}

TEST_CASE("smith normal form examples") {
    CHECK(smith_normal_form(IntMat::identity(3)).divisors() == IntVec{1, 1, 1});

    IntMat d24(2, 2);
    d24.at(0, 0) = 2;
    d24.at(1, 1) = 4;
    CHECK(smith_normal_form(d24).divisors() == IntVec{2, 4});

    IntMat u2(2, 2);  // U(2) gram
    u2.at(0, 1) = 2;
    u2.at(1, 0) = 2;
    CHECK(smith_normal_form(u2).divisors() == IntVec{2, 2});
}

TEST_CASE("smith normal form invariants on random matrices") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 60; ++it) {
        int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 5);
        IntMat m = random_matrix(rng, rows, cols, 9);
        SnfResult s = smith_normal_form(m);
        CHECK(mul(mul(s.a, m), s.b) == s.d);
        Int da = bareiss_determinant(s.a), db = bareiss_determinant(s.b);
        CHECK(abs(da) == 1);
        CHECK(abs(db) == 1);
        IntVec div = s.divisors();
        for (size_t i = 0; i + 1 < div.size(); ++i) CHECK(div[i + 1] % div[i] == 0);
        for (int i = 0; i < s.d.rows; ++i)
            for (int j = 0; j < s.d.cols; ++j)
                if (i != j) CHECK(s.d.at(i, j) == 0);
    }
}

TEST_CASE("integer kernel is a saturated basis of the nullspace") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 40; ++it) {
        int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 5);
        IntMat m = random_matrix(rng, rows, cols, 5);
        IntMat k = integer_kernel(m);
        // every kernel column annihilates
        for (int j = 0; j < k.cols; ++j) {
            IntVec prod = mul_vec(m, k.col(j));
            for (const Int& x : prod) CHECK(x == 0);
        }
        // saturated: elementary divisors all 1
        if (k.cols > 0)
            for (const Int& d : smith_normal_form(k).divisors()) CHECK(d == 1);
    }
}

TEST_CASE("solve_integer") {
    IntMat m(2, 3);
    m.at(0, 0) = 2; m.at(0, 1) = 4; m.at(0, 2) = 6;
    m.at(1, 1) = 3; m.at(1, 2) = 3;
    auto x = solve_integer(m, IntVec{Int(8), Int(6)});
    REQUIRE(x.has_value());
    IntVec prod = mul_vec(m, *x);
    CHECK(prod == IntVec{8, 6});
    CHECK_FALSE(solve_integer(m, IntVec{Int(1), Int(0)}).has_value());
}

TEST_CASE("column_reduce keeps span and tracks payload") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 30; ++it) {
        int rows = 2 + static_cast<int>(rng() % 4);
        int cols = 1 + static_cast<int>(rng() % 5);
        IntMat m = random_matrix(rng, rows, cols, 4);
        IntMat payload = IntMat::identity(cols);
        IntMat basis = column_reduce(m, &payload);
        REQUIRE(payload.cols == basis.cols);
        // payload column j recombines the original columns into basis col j
        for (int j = 0; j < basis.cols; ++j) {
            IntVec rebuilt = mul_vec(m, payload.col(j));
            CHECK(rebuilt == basis.col(j));
        }
        // basis has full column rank
        if (basis.cols > 0) {
            SnfResult s = smith_normal_form(basis);
            CHECK(static_cast<int>(s.divisors().size()) == basis.cols);
        }
    }
}

TEST_CASE("rational inverse and solve") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 20; ++it) {
        IntMat m = random_matrix(rng, 4, 4, 5);
        if (bareiss_determinant(m) == 0) continue;
        RatMat inv = rat_inverse(RatMat(m));
        RatMat prod = mul(inv, RatMat(m));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(prod.at(i, j) == Rat(i == j ? 1 : 0));
        RatVec b{Rat(1), Rat(-2), Rat(3, 2), Rat(0)};
        auto x = solve_rational(RatMat(m), b);
        REQUIRE(x.has_value());
        RatVec back = mul_vec(RatMat(m), *x);
        for (int i = 0; i < 4; ++i) CHECK(back[i] == b[i]);
    }
}
