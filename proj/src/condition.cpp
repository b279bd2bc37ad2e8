#include "k3disc/condition.hpp"

#include <algorithm>
#include <future>

#include "k3disc/binary.hpp"

namespace k3disc {

namespace {

// Deterministic sweep over integer vectors of the given rank: radius
// ascending, support size ascending, support sets lexicographic, then
// coordinate tuples lexicographic with max |coordinate| = radius.
// Callback returns true to stop; sweep returns true when stopped.
template <typename Fn>
bool sweep_vectors(int rank, const Int& max_radius, int max_support, Fn&& fn) {
    int smax = std::min(rank, max_support);
    std::vector<int> support;
    for (Int radius = 1; radius <= max_radius; ++radius) {
        for (int ssize = 1; ssize <= smax; ++ssize) {
            support.assign(ssize, 0);
            for (int i = 0; i < ssize; ++i) support[i] = i;
            for (;;) {
                // coordinate odometer over the support, entries nonzero
                IntVec coords(ssize, -radius);
                for (;;) {
                    Int maxabs = 0;
                    bool nonzero = true;
                    for (const Int& c : coords) {
                        if (c == 0) { nonzero = false; break; }
                        maxabs = std::max(maxabs, Int(abs(c)));
                    }
                    if (nonzero && maxabs == radius) {
                        IntVec v(rank, Int(0));
                        for (int i = 0; i < ssize; ++i) v[support[i]] = coords[i];
                        if (fn(v)) return true;
                    }
                    int i = ssize - 1;
                    while (i >= 0 && coords[i] == radius) { coords[i] = -radius; --i; }
                    if (i < 0) break;
                    ++coords[i];
                }
                // next support subset, lexicographic
                int i = ssize - 1;
                while (i >= 0 && support[i] == rank - ssize + i) --i;
                if (i < 0) break;
                ++support[i];
                for (int j = i + 1; j < ssize; ++j) support[j] = support[j - 1] + 1;
            }
        }
    }
    return false;
}

IntVec rat_to_int_checked(const RatVec& v, const char* what) {
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i])) throw std::logic_error(std::string(what) + ": non-integral entry");
        out[i] = numerator(v[i]);
    }
    return out;
}

RatVec scale_vec(const RatVec& v, const Rat& s) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
    return out;
}

bool is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r == 0; });
}

}  // namespace

Condition Condition::make(const SublatticeEmbedding& s) {
    if (!s.ambient.is_even())
        throw std::invalid_argument("condition: ambient lattice must be even");
    if (s.rank() < 1 || s.rank() >= s.ambient.rank())
        throw std::invalid_argument("condition: sublattice rank out of range");
    if (!is_primitive(s)) {
        throw NotPrimitiveError("condition: sublattice not primitive (saturation attached)",
                                saturate(s).basis);
    }
    Lattice s_form = induced_gram(s, "S");
    Signature sig = signature(s_form);
    if (sig.p != 1)
        throw std::invalid_argument("condition: sublattice not hyperbolic (signature (" +
                                    std::to_string(sig.p) + "," + std::to_string(sig.q) + "))");
    SublatticeEmbedding t = orthogonal_complement(s);
    Lattice t_form = induced_gram(t, "T");
    Projections pr = projection_matrices(s);
    Int a = projection_denominator(s);
    Int b = projection_denominator(t);

    // half-cone reference: first positive-norm vector in sweep order
    IntVec ref;
    sweep_vectors(s.rank(), Int(32), s.rank(), [&](const IntVec& v) {
        if (s_form.norm(v) > 0) { ref = v; return true; }
        return false;
    });
    if (ref.empty()) throw std::logic_error("condition: no positive vector found for the cone");

    return Condition(s, std::move(t), std::move(s_form), std::move(t_form),
                     std::move(pr.onto_s), std::move(pr.onto_t), std::move(a), std::move(b),
                     std::move(ref));
}

Condition make_picard_condition(const SublatticeEmbedding& s_in_k3) {
    if (!s_in_k3.ambient.same_form(k3_lattice()))
        throw std::invalid_argument("picard condition: ambient is not the K3 lattice");
    return Condition::make(s_in_k3);
}

TranscendentalData Condition::transcendental() const {
    return TranscendentalData{t_, signature(t_form_), t_form_.rank() - 2};
}

std::optional<RootDecomposition> discriminant_root_decompose(const Condition& c,
                                                             const IntVec& delta) {
    const Lattice& amb = c.ambient();
    if (amb.norm(delta) != -2) return std::nullopt;
    RatVec ds = mul_vec(c.pi_s(), delta);
    RatVec dt(ds.size());
    for (size_t i = 0; i < ds.size(); ++i) dt[i] = Rat(delta[i]) - ds[i];
    Rat ns = amb.norm(ds), nt = amb.norm(dt);
    bool ok_s = (ns < 0) || is_zero(ds);
    bool ok_t = (nt < 0) || is_zero(dt);
    if (!ok_s || !ok_t) return std::nullopt;

    // denominator bounds hold for every member
    auto cs = coords_in(c.s(), ds);
    auto ct = coords_in(c.t(), dt);
    if (!cs || !ct) throw std::logic_error("root decomposition: projection outside span");
    rat_to_int_checked(scale_vec(*cs, Rat(c.a())), "a * delta_S");
    rat_to_int_checked(scale_vec(*ct, Rat(c.b())), "b * delta_T");
    if (ns + nt != -2) throw std::logic_error("root decomposition: norms do not sum to -2");

    return RootDecomposition{delta, std::move(ds), std::move(dt), std::move(ns), std::move(nt)};
}

namespace {

// Candidates from the sublattice a * pi_S(W) where W is the saturated
// integral orthogonal complement of the given rows; preimages tracked
// through the column reduction.
std::vector<CandidateNormal> candidates_from_perp(const Condition& c, const IntMat& perp_rows) {
    const Lattice& amb = c.ambient();
    const int n = amb.rank();
    IntMat w = integer_kernel(perp_rows);  // n x k, saturated

    // a * pi_S applied to the kernel basis; integral by the denominator bound
    IntMat proj(n, w.cols);
    for (int j = 0; j < w.cols; ++j) {
        RatVec pj = scale_vec(mul_vec(c.pi_s(), w.col(j)), Rat(c.a()));
        proj.set_col(j, rat_to_int_checked(pj, "a * pi_S(kernel basis)"));
    }
    IntMat preimages = w;
    IntMat basis = column_reduce(proj, &preimages);
    if (basis.cols == 0) return {};

    Lattice kform(mul(mul(transpose(basis), amb.gram()), basis), "candidate_lattice");
    Int a2 = c.a() * c.a();
    std::vector<IntVec> found =
        definite_enumerate({kform, -2 * a2, Int(-1), std::nullopt, true});

    std::vector<CandidateNormal> out;
    out.reserve(found.size());
    for (const IntVec& y : found) {
        IntVec scaled = mul_vec(basis, y);
        IntVec pre = mul_vec(preimages, y);
        Rat norm = Rat(kform.norm(y)) / Rat(a2);
        out.push_back(CandidateNormal{std::move(scaled), std::move(pre), std::move(norm)});
    }
    return out;
}

}  // namespace

std::vector<CandidateNormal> hyperplane_candidates_at(const Condition& c, const IntVec& h) {
    const Lattice& amb = c.ambient();
    auto hs = coords_in(c.s(), to_rat(h));
    if (!hs) throw std::invalid_argument("candidates: h not in the rational span of S");
    for (const Rat& r : *hs)
        if (!is_integer(r)) throw std::invalid_argument("candidates: h not in S");
    if (amb.norm(h) <= 0) throw std::invalid_argument("candidates: h^2 must be positive");
    Int g = gcd_vec(h);
    if (g != 1) {
        IntVec prim(h.size());
        for (size_t i = 0; i < h.size(); ++i) prim[i] = h[i] / g;
        IntMat sat(static_cast<int>(prim.size()), 1);
        sat.set_col(0, prim);
        throw NotPrimitiveError("candidates: h not primitive (primitive representative attached)",
                                sat);
    }
    IntMat row(1, amb.rank());
    IntVec gh = mul_vec(amb.gram(), h);
    for (int j = 0; j < amb.rank(); ++j) row.at(0, j) = gh[j];
    return candidates_from_perp(c, row);
}

namespace {

Verdict3 no_verdict(const std::string& kind, const std::string& note) {
    Obstruction o;
    o.kind = kind;
    o.note = note;
    return Verdict3::no(o);
}

Verdict3 lift_with_preimage(const Condition& c, const CandidateNormal& cand,
                            const SearchParams& params) {
    const Lattice& amb = c.ambient();
    const Lattice& tf = c.t_form();
    const int tr = c.t().rank();
    const Rat nu = Rat(-2) - cand.norm;  // required complement norm

    // T-side coset of the preimage: pi_T(x) in T-basis coordinates
    RatVec delta_s = scale_vec(to_rat(cand.scaled), Rat(1) / Rat(c.a()));
    RatVec dt_star(delta_s.size());
    for (size_t i = 0; i < delta_s.size(); ++i) dt_star[i] = Rat(cand.preimage[i]) - delta_s[i];
    auto ct_opt = coords_in(c.t(), dt_star);
    if (!ct_opt) throw std::logic_error("lift: complement part outside span of T");
    const RatVec& ct = *ct_opt;
    bool coset_trivial = std::all_of(ct.begin(), ct.end(), is_integer);

    auto embed_t = [&](const IntVec& t_coords) {
        IntVec v = mul_vec(c.t().basis, t_coords);
        return v;
    };
    auto assemble = [&](const IntVec& delta) {
        // every YES revalidates as a root-family member
        if (amb.norm(delta) != -2) throw std::logic_error("lift: witness norm check failed");
        if (!discriminant_root_decompose(c, delta))
            throw std::logic_error("lift: witness failed membership revalidation");
        return Verdict3::yes(delta);
    };

    if (nu == 0) {
        if (!coset_trivial)
            return no_verdict("isotropy_required",
                              "complement norm 0 forces delta_T = 0, but the T-coset is nontrivial");
        // delta = x - dt_star lies in L and has delta_T = 0
        IntVec delta = cand.preimage;
        IntVec ct_int = rat_to_int_checked(ct, "trivial coset");
        IntVec emb = embed_t(ct_int);
        for (size_t i = 0; i < delta.size(); ++i) delta[i] -= emb[i];
        return assemble(delta);
    }

    // definite complement: decide by complete shifted enumeration
    Signature tsig = signature(tf);
    if (tsig.p == 0) {
        RatVec shift(tr);
        for (int i = 0; i < tr; ++i) shift[i] = ct[i];
        auto hits = definite_enumerate_rat(tf, nu, nu, shift);
        if (hits.empty())
            return no_verdict("definite_enumeration",
                              "complete enumeration of the coset found no vector of the target norm");
        // delta = x + T*z for the found integral part z
        IntVec delta = cand.preimage;
        IntVec emb = embed_t(hits.front());
        for (size_t i = 0; i < delta.size(); ++i) delta[i] += emb[i];
        return assemble(delta);
    }

    // parity: delta_T^2 lies in t*^2 + 2Z for any delta_T in the coset
    Rat tstar_norm = tf.norm(ct);
    Rat diff = nu - tstar_norm;
    if (!is_integer(diff) || mod_floor(numerator(diff), Int(2)) != 0)
        return no_verdict("parity", "target norm not congruent to the coset norm mod 2");

    // scaled coset: w = b * delta_T must satisfy w == w0 (mod b)
    IntVec w0 = rat_to_int_checked(scale_vec(ct, Rat(c.b())), "b * coset");
    Rat target_scaled_rat = Rat(c.b() * c.b()) * nu;
    if (!is_integer(target_scaled_rat))
        return no_verdict("parity", "scaled target norm not integral");
    Int target_scaled = numerator(target_scaled_rat);

    std::vector<Int> moduli = params.moduli.empty() ? default_moduli(tf) : params.moduli;
    if (auto o = coset_mod_obstruction(tf, w0, c.b(), target_scaled, moduli, params))
        return Verdict3::no(*o);

    Verdict3 sv = coset_bounded_search(tf, w0, c.b(), target_scaled, params.box_bound);
    if (sv.tag == Tag::yes) {
        // w = b*delta_T; z = w/b - ct is integral, delta = x + T*z
        RatVec z(tr);
        for (int i = 0; i < tr; ++i) z[i] = Rat((*sv.witness)[i]) / Rat(c.b()) - ct[i];
        IntVec zi = rat_to_int_checked(z, "coset witness");
        IntVec delta = cand.preimage;
        IntVec emb = embed_t(zi);
        for (size_t i = 0; i < delta.size(); ++i) delta[i] += emb[i];
        return assemble(delta);
    }
    return Verdict3::unknown(params.box_bound);
}

}  // namespace

Verdict3 lift_check(const Condition& c, const CandidateNormal& cand, const SearchParams& params) {
    return lift_with_preimage(c, cand, params);
}

Verdict3 lift_check_scaled(const Condition& c, const IntVec& scaled_delta_s,
                           const SearchParams& params) {
    const Lattice& amb = c.ambient();
    const int n = amb.rank();
    // scaled normal must lie in S with norm in [-2a^2, -1]
    auto sc = coords_in(c.s(), to_rat(scaled_delta_s));
    if (!sc) throw std::invalid_argument("lift: normal not in the rational span of S");
    for (const Rat& r : *sc)
        if (!is_integer(r)) throw std::invalid_argument("lift: scaled normal not in S");
    Int norm_scaled = amb.norm(scaled_delta_s);
    Int a2 = c.a() * c.a();
    if (norm_scaled < -2 * a2 || norm_scaled >= 0)
        throw std::invalid_argument("lift: scaled norm outside [-2a^2, -1]");

    // preimage: integral x with a * pi_S(x) = scaled; failure is a glue
    // obstruction (the normal is not a projection of any lattice vector)
    IntMat ap(n, n);
    for (int j = 0; j < n; ++j) {
        RatVec col(n);
        for (int i = 0; i < n; ++i) col[i] = c.pi_s().at(i, j) * Rat(c.a());
        ap.set_col(j, rat_to_int_checked(col, "a * pi_S"));
    }
    auto x = solve_integer(ap, scaled_delta_s);
    if (!x)
        return no_verdict("glue", "normal is not the S-projection of any ambient lattice vector");
    CandidateNormal cand{scaled_delta_s, *x, Rat(norm_scaled) / Rat(a2)};
    return lift_with_preimage(c, cand, params);
}

namespace {

// admissibility data without the signature precondition, for conditions
// over small toy ambients whose complements are definite
AdmissibilityReport admissibility_lenient(const Lattice& t, const SearchParams& params) {
    AdmissibilityReport rep;
    rep.rank = t.rank();
    rep.rank_ok = t.rank() >= 4;
    rep.no_roots = represents_trichotomy(t, Int(-2), params);
    if (t.rank() == 4 && signature(t).p >= 2)
        rep.no_isotropic_rank2 = isotropic_rank2_search(t, params.box_bound);
    return rep;
}

}  // namespace

AdmissibilityReport transcendental_admissible(const Lattice& t, const SearchParams& params) {
    Signature sig = signature(t);
    if (sig.p != 2)
        throw std::invalid_argument("admissibility: signature (" + std::to_string(sig.p) + "," +
                                    std::to_string(sig.q) + "), need two positive directions");
    return admissibility_lenient(t, params);
}

namespace {

PointCheckResult aggregate_check(const Condition& c, std::vector<CandidateNormal> candidates,
                                 const SearchParams& params) {
    PointCheckResult res;
    res.t_report = admissibility_lenient(c.t_form(), params);
    if (!res.t_report.rank_ok)
        res.warnings.push_back("complement rank below 4: hyperplane reading of the wall "
                               "statement is not guaranteed");
    if (res.t_report.no_roots.tag == Tag::unknown)
        res.warnings.push_back("complement root freeness undecided at the current bounds");
    res.candidates = std::move(candidates);

    // the delta_S = 0 branch: a root inside T completes trivially
    if (res.t_report.no_roots.tag == Tag::yes) {
        IntVec root_t = *res.t_report.no_roots.witness;
        IntVec delta = mul_vec(c.t().basis, root_t);
        res.verdict = Verdict3::yes(delta);
        res.warnings.push_back("witness lies in the complement (projection to S is zero)");
        return res;
    }

    // candidates are independent pure checks; K3DISC_THREADS caps the fanout
    const size_t m = res.candidates.size();
    res.candidate_verdicts.resize(m);
    int threads = std::max(1, params.threads);
    if (threads > 1 && m > 1) {
        std::vector<std::future<Verdict3>> futs(m);
        size_t next = 0;
        while (next < m) {
            size_t batch = std::min<size_t>(threads, m - next);
            for (size_t i = 0; i < batch; ++i)
                futs[next + i] = std::async(std::launch::async, [&, idx = next + i] {
                    return lift_check(c, res.candidates[idx], params);
                });
            for (size_t i = 0; i < batch; ++i) res.candidate_verdicts[next + i] = futs[next + i].get();
            next += batch;
        }
    } else {
        for (size_t i = 0; i < m; ++i)
            res.candidate_verdicts[i] = lift_check(c, res.candidates[i], params);
    }

    // YES dominates, then UNKNOWN, then NO
    for (size_t i = 0; i < m; ++i)
        if (res.candidate_verdicts[i].tag == Tag::yes) {
            res.verdict = res.candidate_verdicts[i];
            return res;
        }
    Int max_bound = 0;
    bool any_unknown = res.t_report.no_roots.tag == Tag::unknown;
    if (any_unknown && res.t_report.no_roots.bound) max_bound = *res.t_report.no_roots.bound;
    for (size_t i = 0; i < m; ++i)
        if (res.candidate_verdicts[i].tag == Tag::unknown) {
            any_unknown = true;
            if (res.candidate_verdicts[i].bound)
                max_bound = std::max(max_bound, *res.candidate_verdicts[i].bound);
        }
    if (any_unknown) {
        res.verdict = Verdict3::unknown(max_bound);
        return res;
    }
    res.verdict = no_verdict("avoidance", "every candidate normal certified non-liftable");
    return res;
}

}  // namespace

PointCheckResult ray_hyperplane_check(const Condition& c, const IntVec& h,
                                      const SearchParams& params) {
    return aggregate_check(c, hyperplane_candidates_at(c, h), params);
}

PointCheckResult orthogonal_root_check(const Condition& c, const SublatticeEmbedding& sub,
                                       const SearchParams& params) {
    const Lattice& amb = c.ambient();
    if (!sub.ambient.same_form(amb))
        throw std::invalid_argument("orthogonal root check: ambient mismatch");
    // sub must sit inside S as a sublattice
    for (int j = 0; j < sub.rank(); ++j) {
        auto coords = coords_in(c.s(), to_rat(sub.vector(j)));
        if (!coords) throw std::invalid_argument("orthogonal root check: sub not contained in S");
        for (const Rat& r : *coords)
            if (!is_integer(r))
                throw std::invalid_argument("orthogonal root check: sub not contained in S");
    }
    Signature ssig = signature(induced_gram(sub, "sub"));
    if (ssig.p != 1)
        throw std::invalid_argument("orthogonal root check: sub-condition not hyperbolic");

    PointCheckResult res;
    IntMat rows = mul(transpose(sub.basis), amb.gram());
    res = aggregate_check(c, candidates_from_perp(c, rows), params);
    if (amb.same_form(k3_lattice()) && c.s().rank() > 18)
        res.warnings.push_back("condition rank exceeds 18: the necessary-condition reading "
                               "is outside the stated range, arithmetic check still valid");
    return res;
}

WitnessResult find_avoidance_witness(const Condition& c, const Int& min_square,
                                     const SearchParams& params) {
    const int r = c.s().rank();
    const Lattice& sf = c.s_form();
    Int unknown_skipped = 0;
    std::optional<WitnessResult> found;

    sweep_vectors(r, params.sweep_max_radius, params.sweep_max_support, [&](const IntVec& v) {
        if (gcd_vec(v) != 1) return false;
        if (sf.norm(v) <= min_square) return false;
        if (sf.inner(v, c.cone_ref()) <= 0) return false;  // keep one ray per +/- pair
        IntVec h = mul_vec(c.s().basis, v);
        PointCheckResult check = ray_hyperplane_check(c, h, params);
        if (check.verdict.tag == Tag::no) {
            found = WitnessResult{h, v, sf.norm(v), std::move(check), Int(0), unknown_skipped};
            return true;
        }
        if (check.verdict.tag == Tag::unknown) ++unknown_skipped;
        return false;
    });
    if (!found)
        throw SweepExhausted("avoidance witness sweep exhausted (radius " +
                                 params.sweep_max_radius.str() + ", " + unknown_skipped.str() +
                                 " undecided points)",
                             params.sweep_max_radius, unknown_skipped);
    return *found;
}

bool two_reflective_small_rank(const Lattice& s, const SearchParams& params) {
    if (s.rank() == 1) {
        if (s.gram().at(0, 0) <= 0)
            throw std::invalid_argument("two_reflective: rank-1 lattice must be positive");
        return true;
    }
    if (s.rank() == 2) {
        Signature sig = signature(s);
        if (sig.p != 1 || sig.q != 1)
            throw std::invalid_argument("two_reflective: rank-2 lattice must be hyperbolic");
        Verdict3 m2 = binary_represents(s, Int(-2), params);
        if (m2.tag == Tag::yes) return true;
        Verdict3 z = binary_represents(s, Int(0), params);
        if (z.tag == Tag::yes) return true;
        if (m2.tag == Tag::unknown || z.tag == Tag::unknown)
            throw std::runtime_error("two_reflective: decision exceeded the cycle cap");
        return false;
    }
    throw std::invalid_argument("two_reflective: rank >= 3 out of scope");
}

}  // namespace k3disc
