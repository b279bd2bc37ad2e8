#include "k3disc/lattice.hpp"

namespace k3disc {

Lattice::Lattice(IntMat gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
    if (gram_.rows != gram_.cols)
        throw std::invalid_argument("Lattice: Gram matrix must be square");
    if (!is_symmetric(gram_))
        throw std::invalid_argument("Lattice: Gram matrix must be symmetric");
    det_ = bareiss_determinant(gram_);
    if (det_ == 0)
        throw std::invalid_argument("Lattice: degenerate Gram matrix");
}

bool Lattice::is_even() const {
    for (int i = 0; i < rank(); ++i)
        if (gram_.at(i, i) % 2 != 0) return false;
    return true;
}

Int Lattice::inner(const IntVec& x, const IntVec& y) const {
    if (static_cast<int>(x.size()) != rank() || static_cast<int>(y.size()) != rank())
        throw std::invalid_argument("inner: vector length != lattice rank");
    Int s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < rank(); ++j) row += gram_.at(i, j) * y[j];
        s += x[i] * row;
    }
    return s;
}

Rat Lattice::inner(const RatVec& x, const RatVec& y) const {
    if (static_cast<int>(x.size()) != rank() || static_cast<int>(y.size()) != rank())
        throw std::invalid_argument("inner: vector length != lattice rank");
    Rat s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < rank(); ++j) row += Rat(gram_.at(i, j)) * y[j];
        s += x[i] * row;
    }
    return s;
}

// Symmetric congruence diagonalization over Q, counting diagonal signs.
Signature signature(const Lattice& l) {
    RatMat g(l.gram());
    int n = g.rows;
    Signature sig;
    for (int k = 0; k < n; ++k) {
        if (g.at(k, k) == 0) {
            // look for a later nonzero diagonal entry to swap in
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (g.at(i, i) != 0) { piv = i; break; }
            if (piv >= 0) {
                for (int j = 0; j < n; ++j) std::swap(g.at(k, j), g.at(piv, j));
                for (int i = 0; i < n; ++i) std::swap(g.at(i, k), g.at(i, piv));
            } else {
                // all remaining diagonal entries zero: use an off-diagonal
                // entry, g(k,j) != 0 exists by nondegeneracy
                int j = -1;
                for (int c = k + 1; c < n; ++c)
                    if (g.at(k, c) != 0) { j = c; break; }
                if (j < 0) throw std::logic_error("signature: degenerate block");
                // row/col k += row/col j makes g(k,k) = 2 g(k,j) != 0
                for (int c = 0; c < n; ++c) g.at(k, c) += g.at(j, c);
                for (int r = 0; r < n; ++r) g.at(r, k) += g.at(r, j);
            }
        }
        const Rat p = g.at(k, k);
        if (p > 0) ++sig.p; else ++sig.q;
        for (int i = k + 1; i < n; ++i) {
            if (g.at(i, k) == 0) continue;
            Rat f = g.at(i, k) / p;
            for (int j = 0; j < n; ++j) g.at(i, j) -= f * g.at(k, j);
            for (int r = 0; r < n; ++r) g.at(r, i) -= f * g.at(r, k);
        }
    }
    return sig;
}

Int determinant(const Lattice& l) { return l.det(); }

DiscriminantGroup discriminant_group(const Lattice& l) {
    SnfResult s = smith_normal_form(l.gram());
    DiscriminantGroup g;
    for (const Int& d : s.divisors())
        if (d > 1) g.cyclic_orders.push_back(d);
    return g;
}

bool is_negative_definite(const Lattice& l) {
    Signature s = signature(l);
    return s.p == 0 && s.q == l.rank();
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    int n = a.rank(), m = b.rank();
    IntMat g(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = a.gram().at(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g.at(n + i, n + j) = b.gram().at(i, j);
    return Lattice(g, a.label() + "+" + b.label());
}

Lattice rescale(const Lattice& l, const Int& k) {
    if (k == 0) throw std::invalid_argument("rescale: zero scale");
    IntMat g = l.gram();
    for (Int& x : g.a) x *= k;
    return Lattice(g, l.label() + "(" + k.str() + ")");
}

Lattice hyperbolic_plane() {
    IntMat g(2, 2);
    g.at(0, 1) = 1;
    g.at(1, 0) = 1;
    return Lattice(g, "U");
}

Lattice hyperbolic_plane_scaled(const Int& k) { return rescale(hyperbolic_plane(), k); }

Lattice e8_minus() {
    // Dynkin diagram (Bourbaki numbering): chain 1-3-4-5-6-7-8 with node 2
    // attached to node 4; Cartan matrix negated.
    static const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    IntMat g(8, 8);
    for (int i = 0; i < 8; ++i) g.at(i, i) = -2;
    for (auto& e : edges) {
        g.at(e[0] - 1, e[1] - 1) = 1;
        g.at(e[1] - 1, e[0] - 1) = 1;
    }
    return Lattice(g, "E8(-1)");
}

Lattice rank_one(const Int& n) {
    if (n == 0) throw std::invalid_argument("rank_one: form must be nondegenerate");
    if (n % 2 != 0) throw std::invalid_argument("rank_one: odd norm, even lattice required");
    IntMat g(1, 1);
    g.at(0, 0) = n;
    return Lattice(g, "<" + n.str() + ">");
}

Lattice k3_lattice() {
    Lattice u = hyperbolic_plane();
    Lattice l = direct_sum(direct_sum(u, u), u);
    Lattice e8m = e8_minus();
    l = direct_sum(direct_sum(l, e8m), e8m);
    return Lattice(l.gram(), "K3");
}

}  // namespace k3disc
