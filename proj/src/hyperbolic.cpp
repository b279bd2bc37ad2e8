#include "k3disc/hyperbolic.hpp"

#include <algorithm>
#include <set>

#include "k3disc/enumerate.hpp"

namespace k3disc {

HyperbolicPoint ray_of(const Lattice& l, const IntVec& x, const IntVec& cone_ref) {
    if (l.norm(x) <= 0)
        throw std::invalid_argument("ray_of: vector not in the cone (square <= 0)");
    Int g = gcd_vec(x);
    IntVec rep(x.size());
    for (size_t i = 0; i < x.size(); ++i) rep[i] = x[i] / g;
    Int side = l.inner(rep, cone_ref);
    if (side == 0)
        throw std::invalid_argument("ray_of: reference vector does not separate the half-cones");
    if (side < 0) rep = negated(rep);
    return HyperbolicPoint{l, rep};
}

Hyperplane make_hyperplane(const Lattice& l, const IntVec& e) {
    if (l.norm(e) >= 0)
        throw std::invalid_argument("hyperplane: normal must have negative square");
    Int g = gcd_vec(e);
    IntVec n(e.size());
    for (size_t i = 0; i < e.size(); ++i) n[i] = e[i] / g;
    if (sign_noncanonical(n)) n = negated(n);
    return Hyperplane{l, n};
}

bool on_hyperplane(const HyperbolicPoint& p, const Hyperplane& h) {
    if (!p.lattice.same_form(h.lattice))
        throw std::invalid_argument("on_hyperplane: lattice mismatch");
    return p.lattice.inner(p.rep, h.normal) == 0;
}

Rat separation(const HyperbolicPoint& p, const Hyperplane& h) {
    if (!p.lattice.same_form(h.lattice))
        throw std::invalid_argument("separation: lattice mismatch");
    Int ip = p.lattice.inner(p.rep, h.normal);
    return Rat(ip * ip) / (Rat(p.lattice.norm(p.rep)) * Rat(-p.lattice.norm(h.normal)));
}

std::vector<Hyperplane> hyperplanes_near(const HyperbolicPoint& p, const Int& denom,
                                         const Int& min_norm, const Rat& radius) {
    if (denom < 1) throw std::invalid_argument("hyperplanes_near: denominator must be positive");
    if (min_norm >= 0) throw std::invalid_argument("hyperplanes_near: norm window must be negative");
    if (radius < 0) throw std::invalid_argument("hyperplanes_near: negative radius");

    const Lattice& l = p.lattice;
    const int n = l.rank();
    const Int p2 = l.norm(p.rep);

    // scaled normals f = denom * e lie in the lattice, f^2 in [a^2*min_norm, -1]
    const Int norm_lo = denom * denom * min_norm;
    const Int big_neg = -norm_lo;  // max of -f^2

    // orthogonal part of the lattice at p
    IntVec gp = mul_vec(l.gram(), p.rep);
    IntMat grow(1, n);
    for (int j = 0; j < n; ++j) grow.at(0, j) = gp[j];
    IntMat kbasis = integer_kernel(grow);
    Lattice kform(mul(mul(transpose(kbasis), l.gram()), kbasis), "p_perp");

    std::set<IntVec> normals;
    auto add_scaled = [&](const IntVec& f) {
        Hyperplane h = make_hyperplane(l, f);
        normals.insert(h.normal);
    };

    // c = p.f ranges over multiples of g with c^2 <= radius * p^2 * max(-f^2)
    Int g = gcd_vec(gp);
    Int c_max = (radius == 0) ? Int(0) : rat_sqrt_floor(radius * Rat(p2) * Rat(big_neg));
    for (Int c = 0; c <= c_max; c += g) {
        // exact cap on f^2 from the separation bound (vacuous at c = 0)
        Rat hi_rat = (c == 0) ? Rat(-1) : -Rat(c * c) / (radius * Rat(p2));
        Rat hi = std::min(Rat(-1), hi_rat);
        Rat lo = Rat(norm_lo);
        if (lo > hi) continue;

        if (c == 0) {
            for (const IntVec& y : definite_enumerate_rat(kform, lo, hi, std::nullopt)) {
                add_scaled(mul_vec(kbasis, y));
            }
        } else {
            auto f0 = solve_integer(grow, IntVec{c});
            if (!f0) continue;
            // split f0 along p and its orthogonal complement
            Rat lam = Rat(c) / Rat(p2);
            RatVec f0_perp(n);
            for (int i = 0; i < n; ++i) f0_perp[i] = Rat((*f0)[i]) - lam * Rat(p.rep[i]);
            auto shift = solve_rational(RatMat(kbasis), f0_perp);
            if (!shift) throw std::logic_error("hyperplanes_near: orthogonal split failed");
            Rat par = Rat(c * c) / Rat(p2);  // norm of the p-component
            for (const IntVec& y : definite_enumerate_rat(kform, lo - par, hi - par, *shift)) {
                IntVec f = *f0;
                for (int j = 0; j < kbasis.cols; ++j)
                    for (int i = 0; i < n; ++i) f[i] += kbasis.at(i, j) * y[j];
                add_scaled(f);
            }
        }
    }

    std::vector<Hyperplane> out;
    for (const IntVec& nvec : normals) out.push_back(Hyperplane{l, nvec});
    return out;
}

}  // namespace k3disc
