#pragma once

#include <map>
#include <optional>

#include "k3disc/lattice.hpp"

namespace k3disc {

// An integral sublattice of `ambient`, spanned by the columns of `basis`.
struct SublatticeEmbedding {
    Lattice ambient;
    IntMat basis;  // ambient.rank() x r, columns are the embedded vectors

    int rank() const { return basis.cols; }
    IntVec vector(int j) const { return basis.col(j); }  // ambient coords
};

// Validates: columns independent over Q and induced form nondegenerate.
SublatticeEmbedding make_embedding(Lattice ambient, IntMat basis);

Lattice induced_gram(const SublatticeEmbedding& e);
Lattice induced_gram(const SublatticeEmbedding& e, const std::string& label);

// Primitive closure: same rational span, saturated in the ambient lattice.
SublatticeEmbedding saturate(const SublatticeEmbedding& e);
bool is_primitive(const SublatticeEmbedding& e);

// Saturated integer kernel of basis^T * gram; the full orthogonal
// complement, returned primitive.
SublatticeEmbedding orthogonal_complement(const SublatticeEmbedding& e);

struct Projections {
    RatMat onto_s;  // rank(ambient) x rank(ambient)
    RatMat onto_t;  // identity - onto_s
};
Projections projection_matrices(const SublatticeEmbedding& e);

// Exponent of the induced form's discriminant group: the least a with
// a * proj_S(ambient) contained in S.
Int projection_denominator(const SublatticeEmbedding& e);

// (A, B) = (2a^2, 2b^2) where a, b are the projection denominators of the
// embedding and of its orthogonal complement.  For any delta of square -2
// whose projections both have nonpositive norm, (a*delta_S)^2 lies in
// [-A, 0] and is an integer, likewise on the complement side.
std::pair<Int, Int> projection_norm_bounds(const SublatticeEmbedding& e);

// L / (S + T) for orthogonal primitive S, T of complementary rank, as a
// subgroup of disc(S) x disc(T).  The subgroup is the graph of an
// isomorphism between subgroups of the two factors, so each S-side coset
// determines at most one T-side coset.
struct GlueGroup {
    // basis-coordinate cosets, each entry normalized to [0,1)
    std::vector<std::pair<RatVec, RatVec>> generators;
    std::map<RatVec, RatVec> element_map;  // S-side -> T-side, all elements

    Int order() const { return Int(element_map.size()); }
    std::optional<RatVec> t_coset_for(const RatVec& s_coset_normalized) const;
};
GlueGroup glue_group(const SublatticeEmbedding& s, const SublatticeEmbedding& t);

RatVec normalize_coset(const RatVec& v);  // entrywise fractional part

// catalog embeddings into the K3 lattice
SublatticeEmbedding rank_one_in_k3(const Int& n);  // <n> inside the first U summand
SublatticeEmbedding block_embedding(const Lattice& ambient, int offset, int count);

// Express an ambient vector in sublattice-basis coordinates, if it lies in
// the rational span.
std::optional<RatVec> coords_in(const SublatticeEmbedding& e, const RatVec& ambient_vec);

}  // namespace k3disc
