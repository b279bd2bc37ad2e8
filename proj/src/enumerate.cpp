#include "k3disc/enumerate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "k3disc/binary.hpp"

namespace k3disc {

namespace {

// floor(sqrt(R) - u) for rational R >= 0, u rational.
Int floor_sqrt_minus(const Rat& R, const Rat& u) {
    Int t = rat_sqrt_floor(R) + 1 - rfloor(u);
    while (Rat(t) + u > 0 && (Rat(t) + u) * (Rat(t) + u) > R) --t;
    return t;
}

// integer range [lo, hi] of x with (x + u)^2 <= R; empty when lo > hi
void sqrt_interval(const Rat& R, const Rat& u, Int& lo, Int& hi) {
    if (R < 0) { lo = 1; hi = 0; return; }
    hi = floor_sqrt_minus(R, u);
    lo = -floor_sqrt_minus(R, -u);
}

}  // namespace

std::vector<IntVec> definite_enumerate(const EnumerationRequest& req) {
    if (req.lo > req.hi || req.hi > 0)
        throw std::invalid_argument("definite_enumerate: need lo <= hi <= 0");
    return definite_enumerate_rat(req.lattice, Rat(req.lo), Rat(req.hi), req.shift,
                                  req.dedupe_sign);
}

std::vector<IntVec> definite_enumerate_rat(const Lattice& l, const Rat& lo, const Rat& hi,
                                           const std::optional<RatVec>& shift_in,
                                           bool dedupe_sign) {
    const int n = l.rank();
    if (lo > hi || hi > 0)
        throw std::invalid_argument("definite_enumerate: need lo <= hi <= 0");
    if (shift_in && static_cast<int>(shift_in->size()) != n)
        throw std::invalid_argument("definite_enumerate: shift length mismatch");

    const Rat qhi = -lo;  // Q = -gram, enumerate Q(v) in [qlo, qhi]
    const Rat qlo = -hi;

    std::vector<IntVec> out;
    if (n == 0) {
        if (qlo <= 0 && 0 <= qhi) out.push_back(IntVec{});
        return out;
    }

    // exact rational Cholesky-style completion of Q = -gram
    RatMat q(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q.at(i, j) = Rat(-l.gram().at(i, j));
    for (int i = 0; i < n; ++i) {
        if (q.at(i, i) <= 0)
            throw std::invalid_argument("definite_enumerate: lattice not negative definite");
        for (int j = i + 1; j < n; ++j) {
            q.at(j, i) = q.at(i, j);
            q.at(i, j) /= q.at(i, i);
        }
        for (int k = i + 1; k < n; ++k)
            for (int m = k; m < n; ++m) q.at(k, m) -= q.at(k, i) * q.at(i, m);
    }
    // now Q(v) = sum_i q(i,i) * (v_i + sum_{j>i} q(i,j) v_j)^2

    RatVec shift(n, Rat(0));
    if (shift_in) shift = *shift_in;

    RatVec w(n);  // chosen v_i = shift_i + x_i
    IntVec x(n);

    auto descend = [&](auto&& self, int i, const Rat& t) -> void {
        // offset u_i = shift_i + sum_{j>i} q(i,j) w_j
        Rat u = shift[i];
        for (int j = i + 1; j < n; ++j) u += q.at(i, j) * w[j];
        Rat r = t / q.at(i, i);
        Int lo, hi;
        sqrt_interval(r, u, lo, hi);
        for (Int xi = lo; xi <= hi; ++xi) {
            Rat wi = Rat(xi) + u;  // v_i + (inner offset); contribution uses wi
            Rat used = q.at(i, i) * wi * wi;
            Rat rest = t - used;
            x[i] = xi;
            w[i] = Rat(xi) + shift[i];
            if (i == 0) {
                Rat qval = qhi - rest;
                if (qval >= qlo) out.push_back(x);
            } else {
                self(self, i - 1, rest);
            }
        }
    };
    descend(descend, n - 1, qhi);

    std::sort(out.begin(), out.end());
    if (dedupe_sign) {
        // v ~ -v; for shifted requests -v lies in the coset only when 2*shift
        // is integral
        bool symmetric = true;
        IntVec two_shift(n);
        for (int i = 0; i < n; ++i) {
            Rat ts = 2 * shift[i];
            if (!is_integer(ts)) { symmetric = false; break; }
            two_shift[i] = numerator(ts);
        }
        if (symmetric) {
            std::set<IntVec> keys(out.begin(), out.end());
            std::vector<IntVec> kept;
            for (const IntVec& v : out) {
                IntVec m(n);
                for (int i = 0; i < n; ++i) m[i] = -v[i] - two_shift[i];
                if (keys.count(m) && m < v) continue;
                kept.push_back(v);
            }
            out = std::move(kept);
        }
    }
    return out;
}

std::vector<Int> default_moduli(const Lattice& l) {
    std::set<Int> ms{4, 8, 9, 16, 25, 27, 32, 49, 64};
    Int e = discriminant_group(l).exponent();
    if (2 * e * e > 1) ms.insert(2 * e * e);
    return std::vector<Int>(ms.begin(), ms.end());
}

namespace {

// orthogonal components of the Gram matrix (connected components of the
// nonzero off-diagonal graph); value sets decompose as sumsets over them
std::vector<std::vector<int>> gram_components(const IntMat& g) {
    int n = g.rows;
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int j = 0; j < n; ++j)
                if (j != v && g.at(v, j) != 0 && comp[j] < 0) {
                    comp[j] = comp[s];
                    stack.push_back(j);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(members);
    }
    return out;
}

// Value set mod m of f(x) = (w0 + scale*x)^T A (w0 + scale*x) restricted to
// one component, x ranging over (Z/m)^c.  int64 arithmetic, incremental.
std::vector<char> component_value_set(const IntMat& gram, const std::vector<int>& comp,
                                      const IntVec& w0, const Int& scale, long long m) {
    int c = static_cast<int>(comp.size());
    long long s = to_int64(mod_floor(scale, Int(m)));
    std::vector<long long> a(static_cast<size_t>(c) * c);
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            a[static_cast<size_t>(i) * c + j] = to_int64(mod_floor(gram.at(comp[i], comp[j]), Int(m)));
    std::vector<long long> w(c);
    for (int i = 0; i < c; ++i) w[i] = to_int64(mod_floor(w0[comp[i]], Int(m)));

    // f(x) = const + lin.x + s^2 * x^T a x  (all mod m)
    long long cmod = 0;
    std::vector<long long> lin(c, 0);
    for (int i = 0; i < c; ++i) {
        long long row = 0;
        for (int j = 0; j < c; ++j) row = (row + a[static_cast<size_t>(i) * c + j] * w[j]) % m;
        cmod = (cmod + w[i] * row) % m;
        lin[i] = (2 * s % m) * row % m;
    }
    long long s2 = s * s % m;

    std::vector<char> present(m, 0);
    // delta of incrementing x_i by one: s2*(2*(a x)_i + a_ii) + lin_i;
    // maintain g_i = 2*s2*(a x)_i
    std::vector<long long> grad(c, 0);
    auto rec = [&](auto&& self, int level, long long value) -> void {
        if (level == c) {
            present[value] = 1;
            return;
        }
        std::vector<long long> saved_grad = grad;
        long long v = value;
        for (long long xi = 0; xi < m; ++xi) {
            self(self, level + 1, v);
            // x_level += 1
            long long delta = (grad[level] + s2 * a[static_cast<size_t>(level) * c + level] + lin[level]) % m;
            v = (v + delta) % m;
            for (int i = 0; i < c; ++i)
                grad[i] = (grad[i] + 2 * s2 % m * a[static_cast<size_t>(i) * c + level]) % m;
        }
        grad = saved_grad;
    };
    rec(rec, 0, cmod % m);
    return present;
}

std::string cache_key(const IntMat& gram, const std::vector<int>& comp, const IntVec& w0,
                      const Int& scale, long long m) {
    std::ostringstream os;
    os << m << "|" << scale << "|";
    for (int i : comp) os << i << ",";
    os << "|";
    for (int i : comp) os << mod_floor(w0[i], Int(m)) << ",";
    os << "|";
    for (int i : comp)
        for (int j : comp) os << mod_floor(gram.at(i, j), Int(m)) << ",";
    return os.str();
}

// nullopt when the modulus exceeds the evaluation budget
std::optional<std::vector<char>> value_set_mod(const Lattice& l, const IntVec& w0,
                                               const Int& scale, const Int& modulus,
                                               const SearchParams& params) {
    long long m = to_int64(modulus);
    auto comps = gram_components(l.gram());
    Int points = 0;
    for (const auto& comp : comps) {
        Int p = 1;
        for (size_t i = 0; i < comp.size() && p <= params.value_budget; ++i) p *= m;
        points += p;
        if (points > params.value_budget) return std::nullopt;
    }
    std::vector<char> acc(m, 0);
    acc[0] = 1;
    for (const auto& comp : comps) {
        std::vector<char> vs;
        std::string key = cache_key(l.gram(), comp, w0, scale, m);
        {
            std::lock_guard<std::mutex> lk(params.cache->mu);
            auto it = params.cache->sets.find(key);
            if (it != params.cache->sets.end()) vs = it->second;
        }
        if (vs.empty()) {
            vs = component_value_set(l.gram(), comp, w0, scale, m);
            std::lock_guard<std::mutex> lk(params.cache->mu);
            params.cache->sets[key] = vs;
        }
        std::vector<char> next(m, 0);
        for (long long i = 0; i < m; ++i) {
            if (!acc[i]) continue;
            for (long long j = 0; j < m; ++j)
                if (vs[j]) next[(i + j) % m] = 1;
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

std::optional<Obstruction> coset_mod_obstruction(const Lattice& l, const IntVec& w0,
                                                 const Int& scale, const Int& target_scaled,
                                                 const std::vector<Int>& moduli,
                                                 const SearchParams& params) {
    for (const Int& m : moduli) {
        if (m <= 1) throw std::invalid_argument("mod_obstruction: modulus must exceed 1");
        auto vs = value_set_mod(l, w0, scale, m, params);
        if (!vs) continue;  // over budget, no claim from this modulus
        Int r = mod_floor(target_scaled, m);
        if (!(*vs)[to_int64(r)]) {
            Obstruction o;
            o.kind = "mod";
            o.modulus = m;
            o.residue = r;
            return o;
        }
    }
    return std::nullopt;
}

std::optional<Obstruction> mod_obstruction(const Lattice& l, const Int& target,
                                           const std::vector<Int>& moduli,
                                           const SearchParams& params) {
    IntVec w0(l.rank(), Int(0));
    return coset_mod_obstruction(l, w0, Int(1), target, moduli, params);
}

namespace {

// lexicographic scan of |x_i| <= r shells, r ascending; first hit returned
template <typename Fn>
bool shell_scan(int n, const Int& box_bound, Fn&& accept) {
    for (Int r = 0; r <= box_bound; ++r) {
        IntVec x(n, -r);
        for (;;) {
            Int maxabs = 0;
            for (const Int& xi : x) maxabs = std::max(maxabs, Int(abs(xi)));
            if (maxabs == r && accept(x)) return true;
            int i = n - 1;
            while (i >= 0 && x[i] == r) { x[i] = -r; --i; }
            if (i < 0) break;
            ++x[i];
        }
        if (n == 0) break;
    }
    return false;
}

}  // namespace

Verdict3 coset_bounded_search(const Lattice& l, const IntVec& w0, const Int& scale,
                              const Int& target_scaled, const Int& box_bound) {
    int n = l.rank();
    IntVec found;
    bool hit = shell_scan(n, box_bound, [&](const IntVec& x) {
        IntVec w(n);
        for (int i = 0; i < n; ++i) w[i] = w0[i] + scale * x[i];
        if (l.norm(w) == target_scaled) {
            found = w;
            return true;
        }
        return false;
    });
    if (!hit) return Verdict3::unknown(box_bound);
    // canonical sign when the coset is symmetric
    bool symmetric = true;
    for (int i = 0; i < n; ++i)
        if (mod_floor(2 * w0[i], scale) != 0) { symmetric = false; break; }
    if (symmetric && sign_noncanonical(found)) found = negated(found);
    return Verdict3::yes(found);
}

Verdict3 bounded_indefinite_search(const Lattice& l, const Int& target, const Int& box_bound) {
    IntVec w0(l.rank(), Int(0));
    return coset_bounded_search(l, w0, Int(1), target, box_bound);
}

Verdict3 represents_trichotomy(const Lattice& l, const Int& target, const SearchParams& params) {
    Signature sig = signature(l);
    bool neg_def = (sig.p == 0), pos_def = (sig.q == 0);
    if (neg_def || pos_def) {
        const Lattice& work = neg_def ? l : rescale(l, Int(-1));
        Int t = neg_def ? target : -target;
        if (t > 0) {
            Obstruction o;
            o.kind = "definite_sign";
            o.note = "target sign impossible for a definite form";
            return Verdict3::no(o);
        }
        if (t == 0) {
            Obstruction o;
            o.kind = "definite_anisotropic";
            o.note = "definite form represents 0 only trivially";
            return Verdict3::no(o);
        }
        auto vec = definite_enumerate({work, t, t, std::nullopt, true});
        if (vec.empty()) {
            Obstruction o;
            o.kind = "definite_enumeration";
            o.note = "complete enumeration found no vector of the target norm";
            return Verdict3::no(o);
        }
        return Verdict3::yes(vec.front());
    }
    if (l.rank() == 2) return binary_represents(l, target);
    std::vector<Int> moduli = params.moduli.empty() ? default_moduli(l) : params.moduli;
    if (auto o = mod_obstruction(l, target, moduli, params)) return Verdict3::no(*o);
    return bounded_indefinite_search(l, target, params.box_bound);
}

Verdict3 isotropic_rank2_search(const Lattice& l, const Int& box_bound) {
    Signature sig = signature(l);
    if (std::min(sig.p, sig.q) < 2) {
        Obstruction o;
        o.kind = "structural";
        o.note = "signature (" + std::to_string(sig.p) + "," + std::to_string(sig.q) +
                 "): no 2-dimensional totally isotropic subspace";
        return Verdict3::no(o);
    }
    int n = l.rank();
    // isotropic vectors in the box, canonical sign
    std::vector<IntVec> iso;
    shell_scan(n, box_bound, [&](const IntVec& x) {
        bool zero = std::all_of(x.begin(), x.end(), [](const Int& v) { return v == 0; });
        if (zero || sign_noncanonical(x)) return false;
        if (l.norm(x) == 0) iso.push_back(x);
        return false;
    });
    for (size_t i = 0; i < iso.size(); ++i)
        for (size_t j = i + 1; j < iso.size(); ++j) {
            if (l.inner(iso[i], iso[j]) != 0) continue;
            // independence: some 2x2 minor nonzero
            bool indep = false;
            for (int p = 0; p < n && !indep; ++p)
                for (int q = p + 1; q < n && !indep; ++q)
                    if (iso[i][p] * iso[j][q] - iso[i][q] * iso[j][p] != 0) indep = true;
            if (indep) return Verdict3::yes_pair(iso[i], iso[j]);
        }
    return Verdict3::unknown(box_bound);
}

}  // namespace k3disc
