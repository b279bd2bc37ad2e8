#pragma once

#include "k3disc/embedding.hpp"
#include "k3disc/enumerate.hpp"

namespace k3disc {

// Raised when an operation requires a primitive sublattice; carries the
// primitive closure so callers can echo the suggestion.
struct NotPrimitiveError : std::invalid_argument {
    IntMat saturation;
    NotPrimitiveError(std::string msg, IntMat sat)
        : std::invalid_argument(std::move(msg)), saturation(std::move(sat)) {}
};

struct SweepExhausted : std::runtime_error {
    Int radius_explored;
    Int unknown_points;
    SweepExhausted(std::string msg, Int radius, Int unknowns)
        : std::runtime_error(std::move(msg)), radius_explored(std::move(radius)),
          unknown_points(std::move(unknowns)) {}
};

struct TranscendentalData {
    SublatticeEmbedding t;
    Signature sig;            // (2, rank-2) over the K3 lattice
    int domain_dimension;     // rank(t) - 2
};

// A primitive hyperbolic sublattice S of an even ambient lattice, with its
// orthogonal complement T and cached projection data.  `make` rejects
// non-primitive input (with the saturation attached) and non-hyperbolic
// signatures.
class Condition {
  public:
    static Condition make(const SublatticeEmbedding& s);

    const Lattice& ambient() const { return s_.ambient; }
    const SublatticeEmbedding& s() const { return s_; }
    const SublatticeEmbedding& t() const { return t_; }
    const Lattice& s_form() const { return s_form_; }
    const Lattice& t_form() const { return t_form_; }
    const RatMat& pi_s() const { return pi_s_; }
    const RatMat& pi_t() const { return pi_t_; }
    const Int& a() const { return a_; }  // projection denominator on the S side
    const Int& b() const { return b_; }  // on the T side
    const IntVec& cone_ref() const { return cone_ref_; }  // S-basis coords
    TranscendentalData transcendental() const;

  private:
    Condition(SublatticeEmbedding s, SublatticeEmbedding t, Lattice s_form, Lattice t_form,
              RatMat pi_s, RatMat pi_t, Int a, Int b, IntVec cone_ref)
        : s_(std::move(s)), t_(std::move(t)), s_form_(std::move(s_form)),
          t_form_(std::move(t_form)), pi_s_(std::move(pi_s)), pi_t_(std::move(pi_t)),
          a_(std::move(a)), b_(std::move(b)), cone_ref_(std::move(cone_ref)) {}

    SublatticeEmbedding s_, t_;
    Lattice s_form_, t_form_;
    RatMat pi_s_, pi_t_;
    Int a_, b_;
    IntVec cone_ref_;
};

// Condition whose ambient is the K3 lattice.
Condition make_picard_condition(const SublatticeEmbedding& s_in_k3);

// A norm -2 vector with its two projections; membership in the root family
// requires each projection to have negative square or vanish.
struct RootDecomposition {
    IntVec delta;
    RatVec delta_s, delta_t;  // ambient coordinates
    Rat norm_s, norm_t;
};
std::optional<RootDecomposition> discriminant_root_decompose(const Condition& c,
                                                             const IntVec& delta);

// Candidate wall normal delta_S, stored scaled by a (integral), together
// with a lattice preimage x with pi_S(x) = delta_S.
struct CandidateNormal {
    IntVec scaled;    // a * delta_S, ambient coords
    IntVec preimage;  // x in the ambient lattice
    Rat norm;         // delta_S^2
};

// Complete list of possible wall normals through h: every root-family
// member delta with h.delta = 0 has pi_S(delta) in this list or zero.
// Enumerated inside a * pi_S(h-perp), scaled norms in [-2a^2, -1].
std::vector<CandidateNormal> hyperplane_candidates_at(const Condition& c, const IntVec& h);

// Does some delta_T complete delta_S to a root-family member delta in L?
// (i) the preimage fixes the unique compatible T-side coset; (ii) when the
// required complement norm is 0 only delta_T = 0 qualifies; (iii) definite
// complements are decided by complete enumeration, indefinite ones by
// parity, then modular obstructions, then a bounded search.
Verdict3 lift_check(const Condition& c, const CandidateNormal& cand, const SearchParams& params);

// Entry point for externally supplied normals: derives a preimage or
// returns NO with a glue obstruction.
Verdict3 lift_check_scaled(const Condition& c, const IntVec& scaled_delta_s,
                           const SearchParams& params);

struct AdmissibilityReport {
    int rank = 0;
    bool rank_ok = false;                         // rank >= 4
    Verdict3 no_roots;                            // YES means a root exists
    std::optional<Verdict3> no_isotropic_rank2;   // checked only at rank 4

    bool admissible() const {
        return rank_ok && no_roots.tag == Tag::no &&
               (rank != 4 || (no_isotropic_rank2 && no_isotropic_rank2->tag == Tag::no));
    }
};
// Hypotheses on the complement lattice: signature (2, rank-2) enforced,
// rank >= 4, no vectors of square -2, and at rank 4 no rank-2 isotropic
// sublattice.
AdmissibilityReport transcendental_admissible(const Lattice& t, const SearchParams& params);

struct PointCheckResult {
    Verdict3 verdict;  // YES: witness delta completes; NO: avoidance certificate
    std::vector<CandidateNormal> candidates;
    std::vector<Verdict3> candidate_verdicts;
    AdmissibilityReport t_report;
    std::vector<std::string> warnings;
};

// Does the ray of h lie on a wall H_{pi_S(delta)} for some root-family
// member delta?  NO aggregates a complete avoidance certificate; a single
// undecided candidate (with no YES) makes the whole answer UNKNOWN.
PointCheckResult ray_hyperplane_check(const Condition& c, const IntVec& h,
                                      const SearchParams& params);

// Necessary condition for a sub-condition: is there a root-family member
// delta with sub.delta = 0?  Same machinery with candidates enumerated in
// a * pi_S(sub-perp).
PointCheckResult orthogonal_root_check(const Condition& c, const SublatticeEmbedding& sub,
                                       const SearchParams& params);

struct WitnessResult {
    IntVec h;           // ambient coords
    IntVec h_s_coords;  // S-basis coords
    Int h_square;
    PointCheckResult check;  // NO verdict with its certificate
    Int radius_explored;
    Int unknown_skipped;
};

// Deterministic sweep for a primitive h in S with h^2 > min_square whose
// ray avoids every wall (point check NO).  Sweep order: increasing
// max-coordinate, then increasing support size, support sets and
// coordinates lexicographic; h on the positive side of the stored cone
// reference.  Throws SweepExhausted when the budget runs out.
WitnessResult find_avoidance_witness(const Condition& c, const Int& min_square,
                                     const SearchParams& params);

// Rank 1: hyperbolic, always 2-reflective.  Rank 2: 2-reflective iff the
// form represents -2 or 0.  Rank >= 3 is out of scope.
bool two_reflective_small_rank(const Lattice& s,
                               const SearchParams& params = SearchParams::defaults());

}  // namespace k3disc
