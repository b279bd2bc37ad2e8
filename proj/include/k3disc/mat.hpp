#pragma once

#include <optional>
#include <string>

#include "k3disc/ints.hpp"

namespace k3disc {

// Dense row-major integer matrix, exact arithmetic throughout.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<IntVec>& rows);
    static IntMat from_cols(const std::vector<IntVec>& cols);

    IntVec row(int i) const;
    IntVec col(int j) const;
    void set_col(int j, const IntVec& v);

    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IntMat transpose(const IntMat& m);
IntMat mul(const IntMat& x, const IntMat& y);
IntVec mul_vec(const IntMat& m, const IntVec& v);
bool is_symmetric(const IntMat& m);

// Exact determinant by fraction-free (Bareiss) elimination.
Int bareiss_determinant(IntMat m);

// Smith normal form: d = a * m * b with a, b unimodular and
// d diagonal, d[i] | d[i+1], diagonal entries nonnegative.
struct SnfResult {
    IntMat d, a, b;
    IntVec divisors() const;  // nonzero diagonal entries in order
};
SnfResult smith_normal_form(const IntMat& m);

// Basis of { x : m x = 0 } as matrix columns.  The result spans the full
// rational kernel intersected with Z^cols, so it is saturated.
IntMat integer_kernel(const IntMat& m);

// One integer solution of m x = b, if any.
std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& b);

// Column span of `m` reduced to a full-column-rank basis via unimodular
// column operations (column-style Hermite reduction).  `payload`, when
// given, receives the same column operations: payload column j tracks how
// basis column j is expressed in terms of the originals.
IntMat column_reduce(IntMat m, IntMat* payload = nullptr);

// Canonical column Hermite form of the span: positive pivots, entries to
// the right of each pivot reduced into [0, pivot).  Unique per column span.
IntMat column_hnf(const IntMat& m);

// Dense rational matrix.
struct RatMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    explicit RatMat(const IntMat& m);

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static RatMat identity(int n);
    RatVec col(int j) const;
};

RatMat mul(const RatMat& x, const RatMat& y);
RatVec mul_vec(const RatMat& m, const RatVec& v);
RatVec mul_vec(const RatMat& m, const IntVec& v);
RatMat rat_inverse(const RatMat& m);  // throws on singular input
RatMat add(const RatMat& x, const RatMat& y);

// Solve m x = b over the rationals; nullopt when inconsistent.  For
// full-column-rank m the solution is unique.
std::optional<RatVec> solve_rational(const RatMat& m, const RatVec& b);

RatVec to_rat(const IntVec& v);
std::string to_string(const IntMat& m);

}  // namespace k3disc
