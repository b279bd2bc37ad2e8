#pragma once

#include <json.hpp>

#include "k3disc/condition.hpp"

namespace k3disc {

using nlohmann::json;

json int_to_json(const Int& n);
Int int_from_json(const json& j);
json vec_to_json(const IntVec& v);
IntVec vec_from_json(const json& j);

// { "label": ..., "gram": [[...],...] } or { "construct": ... } forms:
//   {"construct":"k3"} {"construct":"U","scale":2} {"construct":"E8minus"}
//   {"construct":"rank1","n":4} {"construct":"sum","parts":[...]}
json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const json& j);

// { "ambient": <lattice>, "basis": [[...],...] }, basis entries are the
// embedded vectors (columns) in ambient coordinates.
json embedding_to_json(const SublatticeEmbedding& e);
SublatticeEmbedding embedding_from_json(const json& j);

json verdict_to_json(const Verdict3& v);

json params_to_json(const SearchParams& p, const Int& a, const Int& b);
SearchParams params_from_json(const json& j);

// Self-contained certificates; kind "avoidance" (point check NO),
// "hyperplane" (point check YES/UNKNOWN), "orthogonal" (sub-condition check).
json point_certificate(const Condition& c, const IntVec& h, const PointCheckResult& r,
                       const SearchParams& p);
json orthogonal_certificate(const Condition& c, const SublatticeEmbedding& sub,
                            const PointCheckResult& r, const SearchParams& p);

struct ReplayOutcome {
    bool ok = false;
    std::string message;
};
// Rebuilds the condition from the certificate alone, reruns the checks with
// the stored parameters, and compares the regenerated certificate for exact
// equality.  Any tamper shows up as a mismatch.
ReplayOutcome replay_certificate(const json& cert);

}  // namespace k3disc
