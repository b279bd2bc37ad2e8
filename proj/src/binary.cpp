#include "k3disc/binary.hpp"

#include "k3disc/enumerate.hpp"

namespace k3disc {

namespace {

// classical form a x^2 + b xy + c y^2
struct Form {
    Int a, b, c;
    bool operator==(const Form&) const = default;
};

struct Mat2 {
    Int p, q, r, s;  // columns (p,r), (q,s)
    static Mat2 identity() { return {1, 0, 0, 1}; }
};

Mat2 mul2(const Mat2& x, const Mat2& y) {
    return {x.p * y.p + x.q * y.r, x.p * y.q + x.q * y.s,
            x.r * y.p + x.s * y.r, x.r * y.q + x.s * y.s};
}

Mat2 inv2(const Mat2& u) {
    Int det = u.p * u.s - u.q * u.r;
    if (det == 1) return {u.s, -u.q, -u.r, u.p};
    if (det == -1) return {-u.s, u.q, u.r, -u.p};
    throw std::logic_error("inv2: not unimodular");
}

// f(U (x,y)); right action, act(act(f,U),V) = act(f, U V)
Form act(const Form& f, const Mat2& u) {
    Form g;
    g.a = f.a * u.p * u.p + f.b * u.p * u.r + f.c * u.r * u.r;
    g.b = 2 * f.a * u.p * u.q + f.b * (u.p * u.s + u.q * u.r) + 2 * f.c * u.r * u.s;
    g.c = f.a * u.q * u.q + f.b * u.q * u.s + f.c * u.s * u.s;
    return g;
}

Int disc(const Form& f) { return f.b * f.b - 4 * f.a * f.c; }

bool is_reduced(const Form& f, const Int& s) {
    // |sqrt(D) - 2|a|| < b < sqrt(D), with sqrt(D) irrational and s = isqrt(D)
    Int aa = 2 * abs(f.a);
    return f.b >= 1 && f.b <= s && f.b + aa >= s + 1 && aa - f.b <= s;
}

// one reduction step: (a,b,c) -> (c, b', (b'^2 - D)/(4c))
Form rho(const Form& f, const Int& s, Mat2* transform) {
    Int ac = abs(f.c);
    if (ac == 0) throw std::logic_error("rho: zero outer coefficient");
    Int low = (ac > s) ? Int(-ac + 1) : Int(s - 2 * ac + 1);  // window (low-1, low-1+2|c|]
    Int bp = low + mod_floor(-f.b - low, 2 * ac);
    Int m = (bp + f.b) / (2 * f.c);
    Form g{f.c, bp, (bp * bp - disc(f)) / (4 * f.c)};
    if (transform) *transform = mul2(*transform, Mat2{0, -1, 1, m});
    return g;
}

struct Reduced {
    Form form;
    Mat2 u;  // form = act(input, u)
};

std::optional<Reduced> reduce(Form f, const Int& s, const Int& cap) {
    Mat2 u = Mat2::identity();
    Int steps = 0;
    while (!is_reduced(f, s)) {
        f = rho(f, s, &u);
        if (++steps > cap) return std::nullopt;
    }
    return Reduced{f, u};
}

// Walk the cycle of rf looking for `needle`; on a hit, return V with
// act(rf, V) = needle.
std::optional<Mat2> find_on_cycle(const Form& rf, const Form& needle, const Int& s,
                                  const Int& cap) {
    Form cur = rf;
    Mat2 v = Mat2::identity();
    Int steps = 0;
    for (;;) {
        if (cur == needle) return v;
        cur = rho(cur, s, &v);
        if (cur == rf) return std::nullopt;  // full period walked
        if (++steps > cap) return std::nullopt;
    }
}

std::vector<Int> signed_divisors(const Int& t) {
    // all y with y | t, both signs, deterministic order
    std::vector<Int> out;
    Int at = abs(t);
    for (Int d = 1; d * d <= at; ++d) {
        if (at % d != 0) continue;
        out.push_back(d);
        out.push_back(-d);
        Int e = at / d;
        if (e != d) {
            out.push_back(e);
            out.push_back(-e);
        }
    }
    return out;
}

// Bezout extension of a primitive column (p, r) to a determinant-1 matrix.
Mat2 extend_primitive(const Int& p, const Int& r) {
    Int x0 = 0, y0 = 0;
    // gcd(p, r) = 1 = p*x - r*y  =>  det [[p, y],[r, x]] = p x - y r
    Int a = p, b = r, x = 1, y = 0, u = 0, v = 1;
    while (b != 0) {
        Int q = a / b;
        Int t;
        t = a - q * b; a = b; b = t;
        t = x - q * u; x = u; u = t;
        t = y - q * v; y = v; v = t;
    }
    // a = gcd = p*x + r*y (up to sign of gcd)
    if (a == -1) { x = -x; y = -y; a = 1; }
    if (a != 1) throw std::logic_error("extend_primitive: column not primitive");
    x0 = x; y0 = y;
    // p*x0 + r*y0 = 1: take second column (-y0, x0): det = p*x0 + r*y0 = 1
    return Mat2{p, -y0, r, x0};
}

Verdict3 no_verdict(const std::string& kind, const std::string& note) {
    Obstruction o;
    o.kind = kind;
    o.note = note;
    return Verdict3::no(o);
}

Verdict3 yes_checked(const Lattice& l, IntVec w, const Int& target) {
    if (l.norm(w) != target) throw std::logic_error("binary_represents: witness failed revalidation");
    if (sign_noncanonical(w)) w = negated(w);
    return Verdict3::yes(std::move(w));
}

// isotropic (square discriminant) case
Verdict3 represents_square_disc(const Lattice& l, const Form& f, const Int& s,
                                const Int& target) {
    // primitive isotropic vector
    Mat2 u = Mat2::identity();
    if (f.a != 0) {
        Int px = -f.b + s, py = 2 * f.a;
        Int g = boost::multiprecision::gcd(px, py);
        u = extend_primitive(px / g, py / g);
    }
    Form g = act(f, u);  // (0, b', c'), b' != 0 by nondegeneracy
    if (g.a != 0) throw std::logic_error("represents_square_disc: reduction failed");
    if (target == 0) return yes_checked(l, IntVec{u.p, u.r}, target);
    for (const Int& y : signed_divisors(target)) {
        Int rem = target / y - g.c * y;
        if (rem % g.b != 0) continue;
        Int x = rem / g.b;
        return yes_checked(l, IntVec{u.p * x + u.q * y, u.r * x + u.s * y}, target);
    }
    return no_verdict("isotropic_divisors",
                      "no divisor y of the target solves y*(b'x + c'y) = target");
}

}  // namespace

Verdict3 definite_represents(const Lattice& l, const Int& target) {
    Signature sig = signature(l);
    bool neg = (sig.p == 0);
    if (!neg && sig.q != 0) throw std::invalid_argument("definite_represents: indefinite lattice");
    Lattice work = neg ? l : rescale(l, Int(-1));
    Int t = neg ? target : -target;
    if (t > 0)
        return no_verdict("definite_sign", "target sign impossible for a definite form");
    if (t == 0)
        return no_verdict("definite_anisotropic", "definite form represents 0 only trivially");
    auto vecs = definite_enumerate({work, t, t, std::nullopt, true});
    if (vecs.empty())
        return no_verdict("definite_enumeration",
                          "complete enumeration found no vector of the target norm");
    return Verdict3::yes(vecs.front());
}

Verdict3 binary_represents(const Lattice& l, const Int& target, const SearchParams& params) {
    if (l.rank() != 2) throw std::invalid_argument("binary_represents: rank-2 lattice required");
    Form f{l.gram().at(0, 0), 2 * l.gram().at(0, 1), l.gram().at(1, 1)};
    Int d = disc(f);
    if (d < 0) return definite_represents(l, target);
    if (d == 0) throw std::invalid_argument("binary_represents: degenerate form");

    Int s = isqrt_floor(d);
    if (s * s == d) return represents_square_disc(l, f, s, target);

    // anisotropic over Q: only the zero vector is isotropic
    if (target == 0)
        return no_verdict("anisotropic_nonsquare_disc",
                          "nonsquare positive discriminant represents 0 only trivially");

    auto rf = reduce(f, s, params.river_cap);
    if (!rf) return Verdict3::unknown(params.river_cap);

    // t represented  <=>  t/d^2 primitively represented for some d^2 | t
    // <=>  some form (t', z, (z^2-D)/(4t')) lies on the reduction cycle
    Int at = abs(target);
    for (Int dd = 1; dd * dd <= at; ++dd) {
        if (at % (dd * dd) != 0) continue;
        Int tp = target / (dd * dd);
        Int m4 = 4 * abs(tp);
        for (Int z = 0; z < 2 * abs(tp); ++z) {
            if (mod_floor(z * z - d, m4) != 0) continue;
            Form g{tp, z, (z * z - d) / (4 * tp)};
            auto rg = reduce(g, s, params.river_cap);
            if (!rg) return Verdict3::unknown(params.river_cap);
            auto v = find_on_cycle(rf->form, rg->form, s, params.river_cap);
            if (!v) continue;
            // g = act(f, U), witness = dd * U (1,0)
            Mat2 u = mul2(mul2(rf->u, *v), inv2(rg->u));
            return yes_checked(l, IntVec{dd * u.p, dd * u.r}, target);
        }
    }
    return no_verdict("cycle", "no admissible form (t', z, *) lies on the reduction cycle");
}

}  // namespace k3disc
