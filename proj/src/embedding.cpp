#include "k3disc/embedding.hpp"

#include <algorithm>

namespace k3disc {

namespace {

IntMat induced_gram_matrix(const Lattice& ambient, const IntMat& basis) {
    return mul(mul(transpose(basis), ambient.gram()), basis);
}

}  // namespace

SublatticeEmbedding make_embedding(Lattice ambient, IntMat basis) {
    if (basis.rows != ambient.rank())
        throw std::invalid_argument("embedding: basis rows != ambient rank");
    IntMat g = induced_gram_matrix(ambient, basis);
    if (basis.cols > 0 && bareiss_determinant(g) == 0)
        throw std::invalid_argument("embedding: induced form degenerate (or columns dependent)");
    return SublatticeEmbedding{std::move(ambient), std::move(basis)};
}

Lattice induced_gram(const SublatticeEmbedding& e, const std::string& label) {
    return Lattice(induced_gram_matrix(e.ambient, e.basis), label);
}

Lattice induced_gram(const SublatticeEmbedding& e) {
    return induced_gram(e, e.ambient.label() + "|sub");
}

SublatticeEmbedding saturate(const SublatticeEmbedding& e) {
    // span ∩ Z^n via a double kernel: W = ker(basis^T), sat = ker(W^T).
    // Kernels from Smith form are saturated, so the result is primitive;
    // the Hermite form makes the basis canonical (saturate is idempotent
    // as a matrix identity).
    IntMat w = integer_kernel(transpose(e.basis));
    IntMat sat = integer_kernel(transpose(w));
    return SublatticeEmbedding{e.ambient, column_hnf(sat)};
}

bool is_primitive(const SublatticeEmbedding& e) {
    for (const Int& d : smith_normal_form(e.basis).divisors())
        if (d != 1) return false;
    return true;
}

SublatticeEmbedding orthogonal_complement(const SublatticeEmbedding& e) {
    SublatticeEmbedding s = is_primitive(e) ? e : saturate(e);
    IntMat k = integer_kernel(mul(transpose(s.basis), s.ambient.gram()));
    return SublatticeEmbedding{e.ambient, k};
}

Projections projection_matrices(const SublatticeEmbedding& e) {
    // pi_S = B (B^T G B)^{-1} B^T G
    RatMat b(e.basis);
    RatMat g(e.ambient.gram());
    RatMat bt = mul(RatMat(transpose(e.basis)), g);       // B^T G
    RatMat gram_s = mul(bt, b);                           // B^T G B
    RatMat pi_s = mul(mul(b, rat_inverse(gram_s)), bt);
    int n = e.ambient.rank();
    RatMat pi_t = RatMat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pi_t.at(i, j) -= pi_s.at(i, j);
    return Projections{std::move(pi_s), std::move(pi_t)};
}

Int projection_denominator(const SublatticeEmbedding& e) {
    if (e.rank() == 0) return 1;
    return discriminant_group(induced_gram(e)).exponent();
}

std::pair<Int, Int> projection_norm_bounds(const SublatticeEmbedding& e) {
    Int a = projection_denominator(e);
    Int b = projection_denominator(orthogonal_complement(e));
    return {2 * a * a, 2 * b * b};
}

RatVec normalize_coset(const RatVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = frac_part(v[i]);
    return out;
}

std::optional<RatVec> coords_in(const SublatticeEmbedding& e, const RatVec& ambient_vec) {
    return solve_rational(RatMat(e.basis), ambient_vec);
}

std::optional<RatVec> GlueGroup::t_coset_for(const RatVec& s_coset_normalized) const {
    auto it = element_map.find(s_coset_normalized);
    if (it == element_map.end()) return std::nullopt;
    return it->second;
}

GlueGroup glue_group(const SublatticeEmbedding& s, const SublatticeEmbedding& t) {
    const Lattice& amb = s.ambient;
    if (!t.ambient.same_form(amb))
        throw std::invalid_argument("glue_group: different ambient lattices");
    if (s.rank() + t.rank() != amb.rank())
        throw std::invalid_argument("glue_group: ranks do not sum to ambient rank");
    if (!is_primitive(s) || !is_primitive(t))
        throw std::invalid_argument("glue_group: embeddings must be primitive");
    // mutual orthogonality
    IntMat cross = mul(mul(transpose(s.basis), amb.gram()), t.basis);
    for (const Int& x : cross.a)
        if (x != 0) throw std::invalid_argument("glue_group: sublattices not orthogonal");

    Projections pr = projection_matrices(s);
    RatMat bs(s.basis), bt(t.basis);

    // images of the ambient basis vectors in disc(S) x disc(T)
    std::vector<std::pair<RatVec, RatVec>> gens;
    int n = amb.rank();
    for (int i = 0; i < n; ++i) {
        RatVec ei(n, Rat(0));
        ei[i] = 1;
        RatVec ps = mul_vec(pr.onto_s, ei);
        RatVec pt = mul_vec(pr.onto_t, ei);
        auto cs = solve_rational(bs, ps);
        auto ct = solve_rational(bt, pt);
        if (!cs || !ct) throw std::logic_error("glue_group: projection outside span");
        gens.emplace_back(normalize_coset(*cs), normalize_coset(*ct));
    }

    // closure under addition
    GlueGroup g;
    RatVec zero_s(s.rank(), Rat(0)), zero_t(t.rank(), Rat(0));
    g.element_map[zero_s] = zero_t;
    std::vector<std::pair<RatVec, RatVec>> frontier{{zero_s, zero_t}};
    while (!frontier.empty()) {
        auto [es, et] = frontier.back();
        frontier.pop_back();
        for (const auto& [gs, gt] : gens) {
            RatVec ns(es.size()), nt(et.size());
            for (size_t i = 0; i < ns.size(); ++i) ns[i] = frac_part(es[i] + gs[i]);
            for (size_t i = 0; i < nt.size(); ++i) nt[i] = frac_part(et[i] + gt[i]);
            auto it = g.element_map.find(ns);
            if (it == g.element_map.end()) {
                g.element_map[ns] = nt;
                frontier.emplace_back(ns, nt);
            } else if (it->second != nt) {
                throw std::logic_error("glue_group: not the graph of a map (inputs not primitive?)");
            }
        }
    }
    for (const auto& [gs, gt] : gens) {
        bool trivial = std::all_of(gs.begin(), gs.end(), [](const Rat& r) { return r == 0; }) &&
                       std::all_of(gt.begin(), gt.end(), [](const Rat& r) { return r == 0; });
        if (!trivial) g.generators.emplace_back(gs, gt);
    }

    // index check: [L : S+T]^2 = |det S| * |det T| / |det L|
    Int m = g.order();
    Int lhs = m * m * abs(amb.det());
    Int rhs = abs(induced_gram(s).det()) * abs(induced_gram(t).det());
    if (lhs != rhs) throw std::logic_error("glue_group: index invariant violated");
    return g;
}

SublatticeEmbedding rank_one_in_k3(const Int& n) {
    if (n <= 0 || n % 2 != 0)
        throw std::invalid_argument("rank_one_in_k3: need positive even n");
    Lattice k3 = k3_lattice();
    IntMat basis(k3.rank(), 1);
    basis.at(0, 0) = 1;      // e of the first U
    basis.at(1, 0) = n / 2;  // + (n/2) f, norm n, primitive
    return make_embedding(k3, basis);
}

SublatticeEmbedding block_embedding(const Lattice& ambient, int offset, int count) {
    if (offset < 0 || count < 0 || offset + count > ambient.rank())
        throw std::invalid_argument("block_embedding: range out of bounds");
    IntMat basis(ambient.rank(), count);
    for (int j = 0; j < count; ++j) basis.at(offset + j, j) = 1;
    return make_embedding(ambient, basis);
}

}  // namespace k3disc
