#pragma once

#include "k3disc/lattice.hpp"

namespace k3disc {

// Ray of a positive-norm vector, stored as its primitive integral
// representative in the half-cone selected by a reference vector.
struct HyperbolicPoint {
    Lattice lattice;
    IntVec rep;  // primitive, rep^2 > 0, rep . cone_ref > 0
};

// Codimension-one wall { ray x : x.e = 0 }; e and -e give the same wall.
// Stored as a primitive integral normal with canonical sign.
struct Hyperplane {
    Lattice lattice;
    IntVec normal;  // primitive, normal^2 < 0, first nonzero coordinate > 0
};

HyperbolicPoint ray_of(const Lattice& l, const IntVec& x, const IntVec& cone_ref);
Hyperplane make_hyperplane(const Lattice& l, const IntVec& e);

bool on_hyperplane(const HyperbolicPoint& p, const Hyperplane& h);

// (x.e)^2 / (x^2 * (-e^2)): exact rational sinh^2-type separation; zero
// exactly on the wall, invariant under rescaling either argument.
Rat separation(const HyperbolicPoint& p, const Hyperplane& h);

// All walls with normal e in (1/denom) * lattice, e^2 in [min_norm, 0),
// separation from p at most radius.  Complete and finite: the separation
// bound caps |p.e| and the norm window makes the complement search
// definite.
std::vector<Hyperplane> hyperplanes_near(const HyperbolicPoint& p, const Int& denom,
                                         const Int& min_norm, const Rat& radius);

}  // namespace k3disc
