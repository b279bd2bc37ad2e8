// Command line surface: lattice inspection, root enumeration, condition
// validation, wall point checks, avoidance witness search, sub-condition
// orthogonality checks, small-rank 2-reflectivity, certificate replay.
//
// Exit codes: 0 decisive, 2 undecided (UNKNOWN), 1 error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "k3disc/binary.hpp"
#include "k3disc/io.hpp"

using namespace k3disc;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return j;
}

void write_out(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

IntVec parse_coords(const std::string& s) {
    IntVec v;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',' || ch == ' ') {
            if (!cur.empty()) v.emplace_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return v;
}

std::string verdict_line(const Verdict3& v) {
    std::string s = tag_name(v.tag);
    if (v.witness) {
        s += " witness [";
        for (size_t i = 0; i < v.witness->size(); ++i)
            s += (i ? "," : "") + (*v.witness)[i].str();
        s += "]";
    }
    if (v.obstruction) {
        s += " (" + v.obstruction->kind;
        if (v.obstruction->modulus != 0)
            s += " mod " + v.obstruction->modulus.str() + ", residue " +
                 v.obstruction->residue.str();
        s += ")";
    }
    if (v.bound) s += " (searched up to " + v.bound->str() + ")";
    return s;
}

int tag_exit(Tag t) { return t == Tag::unknown ? 2 : 0; }

std::string disc_string(const DiscriminantGroup& d) {
    if (d.cyclic_orders.empty()) return "trivial";
    std::string s;
    for (size_t i = 0; i < d.cyclic_orders.size(); ++i)
        s += (i ? " x " : "") + std::string("Z/") + d.cyclic_orders[i].str();
    return s;
}

SearchParams params_from_cli(const std::vector<long long>& moduli, long long box_bound,
                             long long value_budget, long long sweep_radius,
                             int sweep_support) {
    SearchParams p = SearchParams::defaults();
    for (long long m : moduli) p.moduli.push_back(Int(m));
    if (box_bound > 0) p.box_bound = box_bound;
    if (value_budget > 0) p.value_budget = value_budget;
    if (sweep_radius > 0) p.sweep_max_radius = sweep_radius;
    if (sweep_support > 0) p.sweep_max_support = sweep_support;
    return p;
}

int run_replay(const std::string& path) {
    ReplayOutcome out = replay_certificate(load_json(path));
    std::cout << (out.ok ? "REPLAY OK: " : "REPLAY FAILED: ") << out.message << "\n";
    return out.ok ? 0 : 1;
}

void print_check(const PointCheckResult& r) {
    std::cout << "candidates examined: " << r.candidates.size() << "\n";
    std::cout << "complement admissible: " << (r.t_report.admissible() ? "yes" : "no") << "\n";
    for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
    std::cout << "verdict: " << verdict_line(r.verdict) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for even lattices and K3 Picard conditions"};
    app.require_subcommand(0, 1);

    std::string replay_path;
    app.add_option("--replay", replay_path, "re-validate a certificate file and exit");

    long long seed = 0;
    app.add_option("--seed", seed, "seed recorded for reproducibility (no effect on exact runs)");

    std::vector<long long> moduli;
    long long box_bound = 0, value_budget = 0, sweep_radius = 0;
    int sweep_support = 0;
    app.add_option("--moduli", moduli, "obstruction moduli (default: small prime powers)");
    app.add_option("--box-bound", box_bound, "coordinate box for indefinite searches");
    app.add_option("--value-budget", value_budget, "lattice points evaluated per modulus");
    app.add_option("--budget", sweep_radius, "witness sweep: maximal coordinate radius");
    app.add_option("--max-support", sweep_support, "witness sweep: maximal nonzero coordinates");

    std::string out_path;
    app.add_option("--out", out_path, "write the JSON result/certificate here");

    // lat-info
    auto* lat_info = app.add_subcommand("lat-info", "rank, signature, determinant, parity, discriminant group");
    std::string lat_path;
    lat_info->add_option("file", lat_path, "lattice JSON file")->required();

    // roots
    auto* roots = app.add_subcommand("roots", "vectors of a prescribed square");
    std::string roots_path, roots_mode = "definite";
    long long roots_norm = -2;
    roots->add_option("file", roots_path)->required();
    roots->add_option("--norm", roots_norm, "target square (default -2)");
    roots->add_option("--mode", roots_mode, "definite | trichotomy")
        ->check(CLI::IsMember({"definite", "trichotomy"}));

    // cond
    auto* cond = app.add_subcommand("cond", "discriminant-condition operations");
    cond->require_subcommand(1);
    std::string emb_path, sub_path, h_str, t_path, refl_path;
    long long min_square = 0;

    auto* cmake = cond->add_subcommand("make", "validate an embedding as a condition");
    cmake->add_option("file", emb_path)->required();

    auto* cpoint = cond->add_subcommand("point-check", "does the ray of h lie on a wall?");
    cpoint->add_option("file", emb_path)->required();
    cpoint->add_option("--h", h_str, "ambient coordinates of h, comma separated")->required();

    auto* cwit = cond->add_subcommand("witness", "find h with h^2 > N avoiding all walls");
    cwit->add_option("file", emb_path)->required();
    cwit->add_option("--min-square", min_square, "lower bound N for h^2")->required();

    auto* corth = cond->add_subcommand("orth-check", "root family member orthogonal to a sub-condition?");
    corth->add_option("file", emb_path)->required();
    corth->add_option("--sub", sub_path, "embedding file of the sub-condition")->required();

    auto* cval = cond->add_subcommand("t-validate", "admissibility of a complement lattice");
    cval->add_option("file", t_path)->required();

    auto* crefl = cond->add_subcommand("reflective2", "2-reflectivity for rank 1 and 2");
    crefl->add_option("file", refl_path)->required();

    auto* replay_cmd = app.add_subcommand("replay", "re-validate a certificate file");
    std::string replay_arg;
    replay_cmd->add_option("file", replay_arg)->required();

    CLI11_PARSE(app, argc, argv);
    (void)seed;

    try {
        SearchParams params =
            params_from_cli(moduli, box_bound, value_budget, sweep_radius, sweep_support);

        if (!replay_path.empty()) return run_replay(replay_path);
        if (replay_cmd->parsed()) return run_replay(replay_arg);

        if (lat_info->parsed()) {
            Lattice l = lattice_from_json(load_json(lat_path));
            Signature s = signature(l);
            std::cout << "label: " << l.label() << "\n"
                      << "rank " << l.rank() << ", signature (" << s.p << "," << s.q << ")"
                      << ", det " << determinant(l) << ", "
                      << (l.is_even() ? "even" : "odd") << ", disc "
                      << disc_string(discriminant_group(l)) << "\n";
            return 0;
        }

        if (roots->parsed()) {
            Lattice l = lattice_from_json(load_json(roots_path));
            Int target(roots_norm);
            if (roots_mode == "definite") {
                auto vecs = definite_enumerate({l, target, target, std::nullopt, false});
                json arr = json::array();
                for (const auto& v : vecs) arr.push_back(vec_to_json(v));
                std::cout << vecs.size() << " vectors of square " << target << "\n";
                if (!out_path.empty()) write_out(out_path, arr);
                else if (vecs.size() <= 40) std::cout << arr.dump() << "\n";
                return 0;
            }
            Verdict3 v = represents_trichotomy(l, target, params);
            std::cout << verdict_line(v) << "\n";
            if (!out_path.empty()) write_out(out_path, verdict_to_json(v));
            return tag_exit(v.tag);
        }

        if (cmake->parsed()) {
            SublatticeEmbedding e = embedding_from_json(load_json(emb_path));
            Condition c = Condition::make(e);
            TranscendentalData td = c.transcendental();
            std::cout << "condition valid: S rank " << c.s().rank() << ", T signature ("
                      << td.sig.p << "," << td.sig.q << "), domain dimension "
                      << td.domain_dimension << ", a = " << c.a() << ", b = " << c.b() << "\n";
            return 0;
        }

        if (cpoint->parsed()) {
            Condition c = Condition::make(embedding_from_json(load_json(emb_path)));
            IntVec h = parse_coords(h_str);
            PointCheckResult r = ray_hyperplane_check(c, h, params);
            print_check(r);
            if (!out_path.empty()) write_out(out_path, point_certificate(c, h, r, params));
            return tag_exit(r.verdict.tag);
        }

        if (cwit->parsed()) {
            Condition c = Condition::make(embedding_from_json(load_json(emb_path)));
            try {
                WitnessResult w = find_avoidance_witness(c, Int(min_square), params);
                std::cout << "witness h^2 = " << w.h_square << ", S-coordinates [";
                for (size_t i = 0; i < w.h_s_coords.size(); ++i)
                    std::cout << (i ? "," : "") << w.h_s_coords[i];
                std::cout << "]\n";
                print_check(w.check);
                if (!out_path.empty())
                    write_out(out_path, point_certificate(c, w.h, w.check, params));
                return 0;
            } catch (const SweepExhausted& e) {
                std::cout << "UNDECIDED: " << e.what() << "\n";
                return 2;
            }
        }

        if (corth->parsed()) {
            Condition c = Condition::make(embedding_from_json(load_json(emb_path)));
            SublatticeEmbedding sub = embedding_from_json(load_json(sub_path));
            PointCheckResult r = orthogonal_root_check(c, sub, params);
            print_check(r);
            if (!out_path.empty()) write_out(out_path, orthogonal_certificate(c, sub, r, params));
            return tag_exit(r.verdict.tag);
        }

        if (cval->parsed()) {
            Lattice t = lattice_from_json(load_json(t_path));
            AdmissibilityReport rep = transcendental_admissible(t, params);
            std::cout << "rank " << rep.rank << (rep.rank_ok ? " (ok)" : " (below 4)") << "\n";
            std::cout << "roots of square -2: " << verdict_line(rep.no_roots) << "\n";
            if (rep.no_isotropic_rank2)
                std::cout << "rank-2 isotropic sublattice: " << verdict_line(*rep.no_isotropic_rank2)
                          << "\n";
            std::cout << "admissible: " << (rep.admissible() ? "yes" : "no") << "\n";
            bool unknown = rep.no_roots.tag == Tag::unknown ||
                           (rep.no_isotropic_rank2 && rep.no_isotropic_rank2->tag == Tag::unknown);
            return unknown ? 2 : 0;
        }

        if (crefl->parsed()) {
            Lattice l = lattice_from_json(load_json(refl_path));
            bool r = two_reflective_small_rank(l, params);
            std::cout << "2-reflective: " << (r ? "yes" : "no") << "\n";
            return 0;
        }

        std::cout << app.help() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
