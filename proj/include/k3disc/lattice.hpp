#pragma once

#include <string>

#include "k3disc/mat.hpp"

namespace k3disc {

struct Signature {
    int p = 0;  // positive eigenvalues
    int q = 0;  // negative eigenvalues
    bool operator==(const Signature&) const = default;
};

// The finite group dual/lattice, recorded by its cyclic decomposition
// d_1 | d_2 | ... (nontrivial orders only).
struct DiscriminantGroup {
    IntVec cyclic_orders;

    Int exponent() const { return cyclic_orders.empty() ? Int(1) : cyclic_orders.back(); }
    Int order() const {
        Int o = 1;
        for (const Int& d : cyclic_orders) o *= d;
        return o;
    }
};

// Nondegenerate integral symmetric bilinear form.  Immutable after
// construction; degenerate Gram matrices are rejected.
class Lattice {
  public:
    Lattice(IntMat gram, std::string label);

    int rank() const { return gram_.rows; }
    const IntMat& gram() const { return gram_; }
    const std::string& label() const { return label_; }
    const Int& det() const { return det_; }
    bool is_even() const;

    Int inner(const IntVec& x, const IntVec& y) const;
    Rat inner(const RatVec& x, const RatVec& y) const;
    Int norm(const IntVec& x) const { return inner(x, x); }
    Rat norm(const RatVec& x) const { return inner(x, x); }

    bool same_form(const Lattice& o) const { return gram_ == o.gram_; }

  private:
    IntMat gram_;
    std::string label_;
    Int det_;
};

Signature signature(const Lattice& l);
Int determinant(const Lattice& l);
DiscriminantGroup discriminant_group(const Lattice& l);
bool is_negative_definite(const Lattice& l);

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice rescale(const Lattice& l, const Int& k);

// standard constructions
Lattice hyperbolic_plane();                       // U
Lattice hyperbolic_plane_scaled(const Int& k);    // U(k)
Lattice e8_minus();                               // E8 Cartan form, negated
Lattice rank_one(const Int& n);                   // <n>, n even nonzero
Lattice k3_lattice();                             // U + U + U + E8(-1) + E8(-1)

}  // namespace k3disc
