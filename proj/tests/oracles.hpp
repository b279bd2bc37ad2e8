// Test-only oracles, independent of the library's computation paths.
#pragma once

#include <random>

#include "k3disc/embedding.hpp"

namespace k3disc::oracles {

// Characteristic polynomial by Faddeev-LeVerrier, exact.
inline RatVec char_poly(const IntMat& g) {
    int n = g.rows;
    RatMat a(g), m = RatMat::identity(n);
    RatVec c(n + 1, Rat(0));
    c[n] = 1;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // m = a * (m_prev + c_{n-k+1} I)
            RatMat shifted = m;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
            m = mul(a, shifted);
        } else {
            m = a;
        }
        Rat tr = 0;
        for (int i = 0; i < n; ++i) tr += m.at(i, i);
        c[n - k] = -tr / Rat(k);
    }
    return c;  // c[0] + c[1] x + ... + c[n] x^n
}

// A symmetric integer matrix has all-real eigenvalues, so Descartes' sign
// rule counts positive roots exactly.  Independent route to the signature.
inline std::pair<int, int> signature_oracle(const IntMat& g) {
    RatVec c = char_poly(g);
    int pos = 0;
    int prev = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        int s = c[i] > 0 ? 1 : -1;
        if (prev != 0 && s != prev) ++pos;
        prev = s;
    }
    return {pos, g.rows - pos};  // nondegenerate: no zero eigenvalues
}

// All integer vectors in |x_i| <= bound[i] with gram-norm in [lo, hi].
inline std::vector<IntVec> box_enumerate(const Lattice& l, const IntVec& bound, const Int& lo,
                                         const Int& hi) {
    int n = l.rank();
    std::vector<IntVec> out;
    IntVec x(n);
    for (int i = 0; i < n; ++i) x[i] = -bound[i];
    for (;;) {
        Int norm = l.norm(x);
        if (norm >= lo && norm <= hi) out.push_back(x);
        int i = n - 1;
        while (i >= 0 && x[i] == bound[i]) { x[i] = -bound[i]; --i; }
        if (i < 0) break;
        ++x[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Complete enumeration for negative definite lattices via the dual bound
// |x_i| <= sqrt(C * (Q^{-1})_ii), Q = -gram; a different route than the
// backtracking enumerator.
inline std::vector<IntVec> naive_definite_enumerate(const Lattice& l, const Int& lo,
                                                    const Int& hi) {
    int n = l.rank();
    if (n == 0) return (lo <= 0 && 0 <= hi) ? std::vector<IntVec>{IntVec{}} : std::vector<IntVec>{};
    RatMat q(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q.at(i, j) = Rat(-l.gram().at(i, j));
    RatMat inv = rat_inverse(q);
    IntVec bound(n);
    for (int i = 0; i < n; ++i) bound[i] = rat_sqrt_floor(Rat(-lo) * inv.at(i, i));
    return box_enumerate(l, bound, lo, hi);
}

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(uint64_t seed) : engine(seed) {}
    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(engine);
    }
};

// Random nondegenerate symmetric integer matrix.
inline IntMat random_symmetric_nondegenerate(Rng& rng, int n, int span) {
    for (;;) {
        IntMat g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                g.at(i, j) = rng.uniform(-span, span);
                g.at(j, i) = g.at(i, j);
            }
        if (bareiss_determinant(g) != 0) return g;
    }
}

// Random even negative definite Gram matrix via diagonal dominance.
inline IntMat random_negative_definite_even(Rng& rng, int n, int span) {
    IntMat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            g.at(i, j) = rng.uniform(-span, span);
            g.at(j, i) = g.at(i, j);
        }
    for (int i = 0; i < n; ++i) {
        Int row = 0;
        for (int j = 0; j < n; ++j)
            if (j != i) row += abs(g.at(i, j));
        Int d = row + 2 * rng.uniform(1, span);
        if (d % 2 != 0) ++d;
        g.at(i, i) = -d;
    }
    return g;
}

// Random unimodular matrix as a product of elementary operations.
inline IntMat random_unimodular(Rng& rng, int n, int ops) {
    IntMat u = IntMat::identity(n);
    for (int k = 0; k < ops; ++k) {
        int i = rng.uniform(0, n - 1), j = rng.uniform(0, n - 1);
        if (i == j) continue;
        Int f = rng.uniform(-2, 2);
        for (int c = 0; c < n; ++c) u.at(i, c) += f * u.at(j, c);
    }
    return u;
}

// Random primitive embedding of the given rank into the ambient lattice.
inline SublatticeEmbedding random_primitive_embedding(Rng& rng, const Lattice& ambient, int r,
                                                      int span) {
    int n = ambient.rank();
    for (;;) {
        IntMat basis(n, r);
        for (Int& x : basis.a) x = rng.uniform(-span, span);
        try {
            SublatticeEmbedding raw{ambient, basis};
            SublatticeEmbedding sat = saturate(raw);
            if (sat.rank() != r) continue;
            return make_embedding(ambient, sat.basis);
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
}

// Brute-force representation oracle over |x|,|y| <= box.
inline std::optional<IntVec> binary_brute_force(const Lattice& l, const Int& target, int box) {
    for (Int x = -box; x <= box; ++x)
        for (Int y = -box; y <= box; ++y) {
            if (x == 0 && y == 0) continue;
            IntVec v{x, y};
            if (l.norm(v) == target) return v;
        }
    return std::nullopt;
}

}  // namespace k3disc::oracles
