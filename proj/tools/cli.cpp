#include "cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latmut/cambrian.hpp"
#include "latmut/canonical.hpp"
#include "latmut/census.hpp"
#include "latmut/coxeter.hpp"
#include "latmut/exploration.hpp"
#include "latmut/flip.hpp"
#include "latmut/io.hpp"
#include "latmut/mutation.hpp"
#include "latmut/quiver.hpp"
#include "verify.hpp"

namespace latmut::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
    std::string out_dir = ".";
    unsigned threads = 1;
    std::uint64_t seed = 20240601;
    std::optional<std::size_t> state_cap;
};

// Input errors that map to the usage exit code.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

std::string sanitize(std::string s) {
    for (char& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
    return s;
}

std::string write_output(const Options& opt, const std::string& name, const std::string& content) {
    fs::create_directories(opt.out_dir);
    std::string path = (fs::path(opt.out_dir) / name).string();
    write_file(path, content);
    return path;
}

Poset load_poset(const std::string& path) { return poset_from_json(read_file(path)); }

Lattice load_lattice(const std::string& path) {
    Poset p = load_poset(path);
    auto l = try_as_lattice(p);
    if (!l) throw UsageError(path + " is not a lattice");
    return *l;
}

Elem resolve_element(const Poset& p, const std::string& token) {
    if (!token.empty() && token.find_first_not_of("0123456789") == std::string::npos) {
        Elem x = std::stoul(token);
        if (x >= p.size()) throw UsageError("element index " + token + " out of range");
        return x;
    }
    for (Elem x = 0; x < p.size(); ++x)
        if (p.has_labels() && p.label(x) == token) return x;
    throw UsageError("no element labelled \"" + token + "\"");
}

std::vector<Elem> resolve_list(const Poset& p, const std::string& list) {
    std::vector<Elem> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(resolve_element(p, tok));
    return out;
}

std::optional<CoxeterType> parse_type(const std::string& t) {
    if (t.empty()) return std::nullopt;
    if (t == "A" || t == "a") return CoxeterType::A;
    if (t == "B" || t == "b") return CoxeterType::B;
    throw UsageError("type must be A or B");
}

void emit_poset(const Options& opt, const std::string& name, const Poset& p, std::ostream& out) {
    out << "wrote " << write_output(opt, name + ".json", poset_to_json(p)) << "\n";
    out << "wrote " << write_output(opt, name + ".dot", poset_to_dot(p, name)) << "\n";
}

int cmd_build(const Options& opt, const std::string& spec, std::string name, std::ostream& out) {
    Poset p;
    if (spec.rfind("weak:", 0) == 0) {
        std::smatch m;
        std::string rest = spec.substr(5);
        if (!std::regex_match(rest, m, std::regex("([AaBb])([0-9]+)"))) throw UsageError("bad weak order spec " + spec);
        int n = std::stoi(m[2]);
        if (n < 1 || n > 5) throw UsageError("weak order rank must be 1..5");
        p = build_weak_order(*parse_type(m[1]), n).lattice().poset();
    } else if (fs::exists(spec)) {
        p = load_poset(spec);
        if (name.empty()) name = stem_of(spec);
    } else {
        LabelledPolygon poly = parse_polygon(spec);
        CoxeterOrientation o = orientation_from_polygon(poly);
        Cambrian c = build_cambrian(o);
        p = c.lattice.poset();
        if (name.empty()) name = sanitize(spec);
        out << "wrote "
            << write_output(opt, name + ".quiver.json", quiver_to_json(orientation_to_quiver(o))) << "\n";
    }
    if (name.empty()) name = sanitize(spec);
    emit_poset(opt, name, p, out);
    out << p.size() << " elements, " << p.cover_count() << " covers, "
        << (is_lattice(p) ? "lattice" : "not a lattice") << "\n";
    return kExitOk;
}

int cmd_flip(const Options& opt, const std::string& file, const std::string& footwall, const std::string& pair_file,
             std::ostream& out) {
    auto host = std::make_shared<const Poset>(load_poset(file));
    if (footwall.empty() == pair_file.empty()) throw UsageError("give exactly one of --footwall or --pair");
    FlipPair pair = pair_file.empty() ? make_flip_pair(host, make_set(host->size(), resolve_list(*host, footwall)))
                                      : flip_pair_from_json(*host, read_file(pair_file));
    Poset flipped = flip(pair);
    emit_poset(opt, stem_of(file) + ".flipped", flipped, out);
    out << (is_lattice(flipped) ? "flipped poset is a lattice" : "flipped poset is not a lattice") << "\n";
    return kExitOk;
}

int cmd_mutate(const Options& opt, const std::string& file, const std::string& atom_token, std::ostream& out) {
    Lattice l = load_lattice(file);
    Elem a = resolve_element(l.poset(), atom_token);
    if (l.size() < 2 || !l.poset().is_cover(l.bottom(), a)) throw UsageError(atom_token + " is not an atom");
    FlipPair pair = upset_flip_pair(std::make_shared<const Poset>(l.poset()), a);
    MutationVerdict v = check_mutation(l, pair, true);
    Poset flipped = flip(pair);
    std::string name = stem_of(file) + ".mutated";
    emit_poset(opt, name, flipped, out);
    nlohmann::json j;
    j["atom"] = a;
    j["ac"] = v.ac_ok;
    j["d_sublattice"] = v.d_sublattice_ok;
    j["sublattice"] = v.sublattice_ok;
    j["is_mutation"] = v.is_mutation;
    j["isomorphic_to_input"] = are_isomorphic(flipped, l.poset());
    j["canonical"] = canonical_form(flipped);
    out << "wrote " << write_output(opt, name + ".verdict.json", j.dump(2) + "\n") << "\n";
    out << (v.is_mutation ? "mutation" : "not a mutation") << "\n";
    return v.is_mutation ? kExitOk : kExitFailure;
}

int cmd_reroot(const Options& opt, const std::string& file, const std::string& token, std::ostream& out) {
    Poset p = load_poset(file);
    Reroot r = reroot(p, resolve_element(p, token));
    std::string name = stem_of(file) + ".rerooted";
    emit_poset(opt, name, r.poset, out);
    out << "wrote " << write_output(opt, name + ".steps.json", flip_steps_to_json(r.steps)) << "\n";
    out << r.steps.size() << " flips\n";
    return kExitOk;
}

int cmd_explore(const Options& opt, const std::string& file, const std::string& type_name, std::ostream& out) {
    Lattice l = load_lattice(file);
    auto type = parse_type(type_name);
    MutationGraph g = mutation_graph(l, opt.state_cap.value_or(default_state_cap()));
    ConjectureReport r = verify_ordovician_conjectures(g, type);
    std::string name = stem_of(file) + ".mutation_graph";
    out << "wrote " << write_output(opt, name + ".json", mutation_graph_to_json(g, type)) << "\n";
    out << "wrote " << write_output(opt, name + ".dot", mutation_graph_to_dot(g, type)) << "\n";
    nlohmann::json rep = nlohmann::json::array();
    for (const auto& c : r.classes) {
        nlohmann::json j;
        j["index"] = c.index;
        j["size"] = c.size;
        j["locally_mutable"] = c.locally_mutable;
        j["polygonal"] = c.polygonal;
        j["semidistributive"] = c.semidistributive;
        j["regular_degree"] = c.regular_degree ? nlohmann::json(*c.regular_degree) : nlohmann::json(nullptr);
        j["u_map"] = c.u_map_ok;
        if (c.quiver_commutes) j["quiver_commutes"] = *c.quiver_commutes;
        rep.push_back(j);
    }
    out << "wrote " << write_output(opt, name + ".report.json", rep.dump(2) + "\n") << "\n";
    out << g.size() << " classes, " << g.edges.size() << " edges, " << g.non_lattice_flips.size()
        << " non-lattice flips, conjectures " << (r.all_pass ? "hold" : "fail") << "\n";
    return kExitOk;
}

int cmd_verify(const Options& opt, const std::string& suite, std::ostream& out) {
    std::vector<CheckResult> results;
    try {
        results = run_suite(suite, opt.seed, opt.threads);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    bool ok = true;
    for (const auto& r : results) {
        out << (r.ok ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
        ok = ok && r.ok;
    }
    return ok ? kExitOk : kExitFailure;
}

int cmd_census(const Options& opt, std::ostream& out) {
    Census c = associahedron_census();
    out << "wrote " << write_output(opt, "census.json", census_to_json(c)) << "\n";
    for (const auto& k : c.classes)
        out << k.classification << ": " << k.orientations << " orientations, "
            << (k.locally_mutable ? "locally mutable" : "not locally mutable") << "\n";
    out << c.classes.size() << " lattice classes from " << c.orientations << " orientations\n";
    return kExitOk;
}

int cmd_export_dot(const Options& opt, const std::string& file, std::ostream& out) {
    std::string text = read_file(file);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(file + ": " + e.what());
    }
    std::string name = stem_of(file);
    std::string dot = j.is_object() && j.contains("weights") ? quiver_to_dot(quiver_from_json(text), name)
                                                             : poset_to_dot(poset_from_json(text), name);
    out << "wrote " << write_output(opt, name + ".dot", dot) << "\n";
    return kExitOk;
}

// Malformed or out-of-contract input rather than a failed computation.
bool is_input_error(const std::exception& e) {
    return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidPoset*>(&e) ||
           dynamic_cast<const IndexOutOfRange*>(&e) || dynamic_cast<const NotALattice*>(&e) ||
           dynamic_cast<const NoDescentViolated*>(&e) || dynamic_cast<const EmptySide*>(&e) ||
           dynamic_cast<const Disconnected*>(&e) || dynamic_cast<const RankCapExceeded*>(&e) ||
           dynamic_cast<const PreconditionFailed*>(&e) || dynamic_cast<const fs::filesystem_error*>(&e);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Flips and mutations of finite lattices"};
    app.name("latmut");
    app.require_subcommand(1);
    Options opt;
    app.add_option("-o,--out", opt.out_dir, "Output directory")->capture_default_str();
    app.add_option("--threads", opt.threads, "Worker threads for verify suites")->capture_default_str();
    app.add_option("--seed", opt.seed, "Seed for randomized suites")->capture_default_str();
    app.add_option("--state-cap", opt.state_cap, "BFS state cap (default: LATMUT_STATE_CAP or 1000000)");

    std::string spec, name, file, footwall, pair_file, token, type_name, suite = "all";
    auto* build = app.add_subcommand(
        "build",
        "Build a lattice: A3:UL or B3:UL (sides of labels 2..n in type A, 1..n-1 in type B; "
        "a full assignment is also accepted), weak:A3, or a poset JSON file");
    build->add_option("spec", spec)->required();
    build->add_option("--name", name, "Output file stem");
    auto* flip_cmd = app.add_subcommand("flip", "Flip a poset along a footwall");
    flip_cmd->add_option("file", file)->required();
    flip_cmd->add_option("--footwall", footwall, "Comma-separated elements of A");
    flip_cmd->add_option("--pair", pair_file, "Flip pair JSON {\"A\":[...]}");
    auto* mutate = app.add_subcommand("mutate", "Mutate a lattice at an atom (index or label)");
    mutate->add_option("file", file)->required();
    mutate->add_option("atom", token)->required();
    auto* reroot_cmd = app.add_subcommand("reroot", "Flip until the given element is the minimum");
    reroot_cmd->add_option("file", file)->required();
    reroot_cmd->add_option("element", token)->required();
    auto* explore = app.add_subcommand("explore", "Mutation graph up to isomorphism");
    explore->add_option("file", file)->required();
    explore->add_option("--type", type_name, "Coxeter type A or B for quiver checks");
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "all|flip|coxeter|cambrian|census")->capture_default_str();
    auto* census = app.add_subcommand("census", "Lattice orientations of the A3 associahedron graph");
    auto* export_dot = app.add_subcommand("export-dot", "DOT for a poset or quiver JSON file");
    export_dot->add_option("file", file)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (build->parsed()) return cmd_build(opt, spec, name, out);
        if (flip_cmd->parsed()) return cmd_flip(opt, file, footwall, pair_file, out);
        if (mutate->parsed()) return cmd_mutate(opt, file, token, out);
        if (reroot_cmd->parsed()) return cmd_reroot(opt, file, token, out);
        if (explore->parsed()) return cmd_explore(opt, file, type_name, out);
        if (verify->parsed()) return cmd_verify(opt, suite, out);
        if (census->parsed()) return cmd_census(opt, out);
        if (export_dot->parsed()) return cmd_export_dot(opt, file, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        if (is_input_error(e)) {
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        err << "failure: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace latmut::cli
