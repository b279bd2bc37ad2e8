#include "k3disc/io.hpp"

namespace k3disc {

json int_to_json(const Int& n) {
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
        return json(to_int64(n));
    return json(n.str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer (number or decimal string)");
}

json vec_to_json(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

IntVec vec_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected coordinate array");
    IntVec v;
    for (const auto& e : j) v.push_back(int_from_json(e));
    return v;
}

json lattice_to_json(const Lattice& l) {
    json g = json::array();
    for (int i = 0; i < l.rank(); ++i) g.push_back(vec_to_json(l.gram().row(i)));
    return json{{"label", l.label()}, {"gram", g}};
}

Lattice lattice_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("lattice: expected object");
    if (j.contains("construct")) {
        std::string c = j.at("construct").get<std::string>();
        Lattice l = [&]() -> Lattice {
            if (c == "k3") return k3_lattice();
            if (c == "U") return hyperbolic_plane();
            if (c == "E8minus") return e8_minus();
            if (c == "rank1") return rank_one(int_from_json(j.at("n")));
            if (c == "sum") {
                const json& parts = j.at("parts");
                if (!parts.is_array() || parts.empty())
                    throw std::invalid_argument("lattice: sum needs nonempty parts");
                Lattice acc = lattice_from_json(parts[0]);
                for (size_t i = 1; i < parts.size(); ++i)
                    acc = direct_sum(acc, lattice_from_json(parts[i]));
                return acc;
            }
            throw std::invalid_argument("lattice: unknown construct '" + c + "'");
        }();
        if (j.contains("scale")) l = rescale(l, int_from_json(j.at("scale")));
        if (j.contains("label")) return Lattice(l.gram(), j.at("label").get<std::string>());
        return l;
    }
    const json& g = j.at("gram");
    if (!g.is_array()) throw std::invalid_argument("lattice: gram must be an array of rows");
    std::vector<IntVec> rows;
    for (const auto& r : g) rows.push_back(vec_from_json(r));
    std::string label = j.value("label", std::string("lattice"));
    return Lattice(IntMat::from_rows(rows), label);
}

json embedding_to_json(const SublatticeEmbedding& e) {
    json basis = json::array();
    for (int j = 0; j < e.rank(); ++j) basis.push_back(vec_to_json(e.vector(j)));
    return json{{"ambient", lattice_to_json(e.ambient)}, {"basis", basis}};
}

SublatticeEmbedding embedding_from_json(const json& j) {
    Lattice amb = lattice_from_json(j.at("ambient"));
    const json& b = j.at("basis");
    if (!b.is_array() || b.empty())
        throw std::invalid_argument("embedding: basis must be a nonempty array of vectors");
    std::vector<IntVec> cols;
    for (const auto& col : b) cols.push_back(vec_from_json(col));
    return make_embedding(std::move(amb), IntMat::from_cols(cols));
}

json verdict_to_json(const Verdict3& v) {
    json j{{"tag", tag_name(v.tag)}};
    if (v.witness) j["witness"] = vec_to_json(*v.witness);
    if (v.witness_pair)
        j["witness_pair"] = json::array({vec_to_json(v.witness_pair->first),
                                         vec_to_json(v.witness_pair->second)});
    if (v.obstruction) {
        json o{{"kind", v.obstruction->kind}};
        if (v.obstruction->modulus != 0) {
            o["modulus"] = int_to_json(v.obstruction->modulus);
            o["residue"] = int_to_json(v.obstruction->residue);
        }
        if (!v.obstruction->note.empty()) o["note"] = v.obstruction->note;
        j["obstruction"] = o;
    }
    if (v.bound) j["bound"] = int_to_json(*v.bound);
    return j;
}

json params_to_json(const SearchParams& p, const Int& a, const Int& b) {
    json moduli = json::array();
    for (const Int& m : p.moduli) moduli.push_back(int_to_json(m));
    return json{{"a", int_to_json(a)},
                {"b", int_to_json(b)},
                {"moduli", moduli},
                {"box_bound", int_to_json(p.box_bound)},
                {"value_budget", int_to_json(p.value_budget)},
                {"river_cap", int_to_json(p.river_cap)}};
}

SearchParams params_from_json(const json& j) {
    SearchParams p = SearchParams::defaults();
    p.moduli.clear();
    for (const auto& m : j.at("moduli")) p.moduli.push_back(int_from_json(m));
    p.box_bound = int_from_json(j.at("box_bound"));
    p.value_budget = int_from_json(j.at("value_budget"));
    p.river_cap = int_from_json(j.at("river_cap"));
    return p;
}

namespace {

json admissibility_to_json(const AdmissibilityReport& r) {
    json j{{"rank", r.rank}, {"rank_ok", r.rank_ok}, {"no_roots", verdict_to_json(r.no_roots)}};
    if (r.no_isotropic_rank2) j["no_isotropic_rank2"] = verdict_to_json(*r.no_isotropic_rank2);
    return j;
}

json check_body(const Condition& c, const PointCheckResult& r, const SearchParams& p) {
    json cands = json::array();
    for (size_t i = 0; i < r.candidates.size(); ++i) {
        json entry{{"delta_S_times_a", vec_to_json(r.candidates[i].scaled)}};
        if (i < r.candidate_verdicts.size())
            entry["verdict"] = verdict_to_json(r.candidate_verdicts[i]);
        cands.push_back(entry);
    }
    json basis = json::array();
    for (int j = 0; j < c.s().rank(); ++j) basis.push_back(vec_to_json(c.s().vector(j)));
    json warnings = json::array();
    for (const auto& w : r.warnings) warnings.push_back(w);
    return json{{"ambient", lattice_to_json(c.ambient())},
                {"s_basis", basis},
                {"params", params_to_json(p, c.a(), c.b())},
                {"t_admissibility", admissibility_to_json(r.t_report)},
                {"candidates", cands},
                {"verdict", verdict_to_json(r.verdict)},
                {"warnings", warnings}};
}

}  // namespace

json point_certificate(const Condition& c, const IntVec& h, const PointCheckResult& r,
                       const SearchParams& p) {
    json cert = check_body(c, r, p);
    cert["kind"] = (r.verdict.tag == Tag::no) ? "avoidance" : "hyperplane";
    cert["h"] = vec_to_json(h);
    cert["h_square"] = int_to_json(c.ambient().norm(h));
    return cert;
}

json orthogonal_certificate(const Condition& c, const SublatticeEmbedding& sub,
                            const PointCheckResult& r, const SearchParams& p) {
    json cert = check_body(c, r, p);
    cert["kind"] = "orthogonal";
    json basis = json::array();
    for (int j = 0; j < sub.rank(); ++j) basis.push_back(vec_to_json(sub.vector(j)));
    cert["sub_basis"] = basis;
    return cert;
}

ReplayOutcome replay_certificate(const json& cert) {
    try {
        std::string kind = cert.at("kind").get<std::string>();
        Lattice amb = lattice_from_json(cert.at("ambient"));
        std::vector<IntVec> cols;
        for (const auto& col : cert.at("s_basis")) cols.push_back(vec_from_json(col));
        Condition c = Condition::make(make_embedding(amb, IntMat::from_cols(cols)));
        SearchParams p = params_from_json(cert.at("params"));

        if (int_from_json(cert.at("params").at("a")) != c.a() ||
            int_from_json(cert.at("params").at("b")) != c.b())
            return {false, "projection denominators do not match the stored values"};

        json regenerated;
        if (kind == "avoidance" || kind == "hyperplane") {
            IntVec h = vec_from_json(cert.at("h"));
            PointCheckResult r = ray_hyperplane_check(c, h, p);
            regenerated = point_certificate(c, h, r, p);
        } else if (kind == "orthogonal") {
            std::vector<IntVec> scols;
            for (const auto& col : cert.at("sub_basis")) scols.push_back(vec_from_json(col));
            SublatticeEmbedding sub = make_embedding(amb, IntMat::from_cols(scols));
            PointCheckResult r = orthogonal_root_check(c, sub, p);
            regenerated = orthogonal_certificate(c, sub, r, p);
        } else {
            return {false, "unknown certificate kind '" + kind + "'"};
        }

        if (regenerated == cert) return {true, "replay reproduced the certificate exactly"};
        for (auto it = regenerated.begin(); it != regenerated.end(); ++it) {
            if (!cert.contains(it.key()) || cert.at(it.key()) != it.value())
                return {false, "mismatch at field '" + it.key() + "'"};
        }
        return {false, "certificate carries fields the replay did not produce"};
    } catch (const std::exception& e) {
        return {false, std::string("replay failed: ") + e.what()};
    }
}

}  // namespace k3disc
