#pragma once

#include "k3disc/lattice.hpp"
#include "k3disc/params.hpp"
#include "k3disc/verdict.hpp"

namespace k3disc {

// Exact representation decision for a rank-2 lattice: always YES (with a
// revalidating witness) or NO (with a finite certificate).  Definite forms
// delegate to complete enumeration.  Indefinite nonsquare-discriminant
// forms walk the reduction cycle; a target t is represented iff some form
// (t/d^2, z, *) of the same discriminant lies on the cycle.  Square
// discriminants factor through an isotropic vector and a divisor scan.
// For target 0 the witness is required to be nonzero.
Verdict3 binary_represents(const Lattice& l, const Int& target,
                           const SearchParams& params = SearchParams::defaults());

// Whether a definite lattice represents the target; decisive.
Verdict3 definite_represents(const Lattice& l, const Int& target);

}  // namespace k3disc
