// One PASS/FAIL line per acceptance criterion, each under a fixed time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "latmut/cambrian.hpp"
#include "latmut/canonical.hpp"
#include "latmut/census.hpp"
#include "latmut/coxeter.hpp"
#include "latmut/distance.hpp"
#include "latmut/exploration.hpp"
#include "latmut/flip.hpp"
#include "latmut/generate.hpp"
#include "latmut/mutation.hpp"
#include "latmut/quiver.hpp"
#include "latmut/reference.hpp"
#include "oracles.hpp"

using namespace latmut;
using namespace latmut::test;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Failure {
    std::string what;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure{what};
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<std::string()> body;
};

std::shared_ptr<const Poset> share(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

// Every footwall of a flip pair: proper nonempty down-sets.
std::vector<Bitset> proper_down_sets(const Poset& p) {
    const std::size_t n = p.size();
    std::vector<Bitset> out;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        bool closed = true;
        for (auto [lo, hi] : p.covers())
            if ((mask >> hi & 1) && !(mask >> lo & 1)) closed = false;
        if (!closed) continue;
        Bitset a(n);
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) a.set(i);
        out.push_back(a);
    }
    return out;
}

int big_d(const std::vector<std::vector<int>>& d, Elem x, Elem y, Elem z) {
    return d[x][y] + d[y][z] - d[x][z];
}

std::multiset<std::pair<std::string, std::string>> graph_key_edges(const MutationGraph& g, CoxeterType type) {
    std::vector<std::string> keys;
    for (const auto& rep : g.representatives) keys.push_back(quiver_iso_key(quiver_from_lattice(rep, type).quiver));
    std::multiset<std::pair<std::string, std::string>> out;
    for (const auto& e : g.edges) out.emplace(keys[e.from], keys[e.to]);
    return out;
}

std::multiset<std::pair<std::string, std::string>> figure_key_edges(const std::vector<QuiverGraphEdge>& edges) {
    std::multiset<std::pair<std::string, std::string>> out;
    for (const auto& e : edges) out.emplace(quiver_iso_key(e.from), quiver_iso_key(e.to));
    return out;
}

std::string cambrian_drawings() {
    Lattice a3 = build_cambrian(make_orientation(CoxeterType::A, 3, "RR")).lattice;
    require(a3.size() == 14, "A3 size " + std::to_string(a3.size()));
    require(brute_isomorphic(a3.poset(), tamari_a3_drawing()), "A3 differs from the drawing");
    Lattice b3 = build_cambrian(make_orientation(CoxeterType::B, 3, "LL")).lattice;
    require(b3.size() == 20, "B3 size " + std::to_string(b3.size()));
    require(are_isomorphic(b3.poset(), tamari_b3_drawing()), "B3 differs from the drawing");
    return "14 and 20 elements";
}

std::string mutation_iff_lattice() {
    std::size_t pairs = 0, lattices = 0, positives = 0;
    auto run = [&](const Lattice& l) {
        auto host = share(l.poset());
        for (const Bitset& a : proper_down_sets(*host)) {
            FlipPair pair = make_flip_pair(host, a);
            bool predicted = check_mutation(l, pair).is_mutation;
            bool actual = brute_is_lattice(flip(pair));
            require(predicted == actual, "disagreement on a lattice of size " + std::to_string(l.size()));
            ++pairs;
            positives += actual;
        }
        ++lattices;
    };
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& l : all_lattices(n)) run(l);
    Rng rng(7001);
    for (int i = 0; i < 1000; ++i) run(random_lattice(7 + static_cast<std::size_t>(i % 3), rng));
    std::ostringstream os;
    os << lattices << " lattices, " << pairs << " pairs, " << positives << " lattice flips";
    return os.str();
}

std::string weak_order_mutations() {
    std::size_t checked = 0;
    for (auto [type, n] : {std::pair{CoxeterType::A, 2}, std::pair{CoxeterType::A, 3}, std::pair{CoxeterType::B, 2},
                           std::pair{CoxeterType::B, 3}}) {
        WeakOrder w = build_weak_order(type, n);
        for (int g = 1; g <= n; ++g) {
            Elem a = w.generator(g);
            Poset flipped = flip_on_atom(w.lattice().poset(), a);
            require(brute_is_lattice(flipped), "weak order mutation is not a lattice");
            std::vector<Elem> iso(w.size());
            for (Elem x = 0; x < w.size(); ++x) {
                std::vector<int> ax;
                if (type == CoxeterType::A)
                    ax = mult(generator_a(n, g), PermA{w.images(x)}).images;
                else
                    ax = mult(generator_b(n, g), PermB{w.images(x)}).images;
                auto idx = w.index_of(ax);
                require(idx.has_value(), "a*x missing");
                iso[x] = *idx;
            }
            for (Elem x = 0; x < w.size(); ++x)
                for (Elem y = 0; y < w.size(); ++y)
                    require(flipped.leq(x, y) == w.lattice().leq(iso[x], iso[y]), "x -> ax is not an order isomorphism");
            WeakMutation m = weak_order_mutation(w, g);
            require(m.iso == iso && m.mutated.poset() == flipped, "library mutation disagrees");
            ++checked;
        }
    }
    return std::to_string(checked) + " generators";
}

std::string cambrian_mutations() {
    std::size_t sink_source = 0, quivers = 0;
    for (auto [type, cap] : {std::pair{CoxeterType::A, 4}, std::pair{CoxeterType::B, 3}})
        for (int n = 1; n <= cap; ++n)
            for (const auto& o : all_orientations(type, n)) {
                Cambrian c = build_cambrian(o);
                auto atoms = atoms_by_vertex(c);
                WeightedQuiver q = quiver_from_lattice(c.lattice, type, atoms).quiver;
                require(q == orientation_to_quiver(o), "quiver of a Cambrian lattice");
                for (int i = 1; i <= n; ++i) {
                    Poset flipped = flip_on_atom(c.lattice.poset(), atoms[static_cast<std::size_t>(i - 1)]);
                    auto m = try_as_lattice(flipped);
                    require(m.has_value(), "atom mutation is not a lattice");
                    auto order = mutated_atom_order(c.lattice, atoms, static_cast<std::size_t>(i - 1), *m);
                    require(quiver_from_lattice(*m, type, order).quiver == mutate_quiver(q, i - 1),
                            "quiver of a mutation differs from quiver mutation");
                    ++quivers;
                    if (!is_sink_or_source(o, i)) continue;
                    require(are_isomorphic(flipped, build_cambrian(reflect(o, i)).lattice.poset()),
                            "sink/source mutation is not the reflected Cambrian lattice");
                    ++sink_source;
                }
            }
    return std::to_string(sink_source) + " sink/source, " + std::to_string(quivers) + " quivers";
}

std::string mutation_graphs() {
    MutationGraph a = mutation_graph(tamari_a3());
    require(a.size() == 4, "A3 classes " + std::to_string(a.size()));
    require(graph_key_edges(a, CoxeterType::A) == figure_key_edges(a3_quiver_mutation_graph()), "A3 edges");
    MutationGraph b = mutation_graph(build_cambrian(make_orientation(CoxeterType::B, 3, "RR")).lattice);
    require(b.size() == 5, "B3 classes " + std::to_string(b.size()));
    require(graph_key_edges(b, CoxeterType::B) == figure_key_edges(b3_quiver_mutation_graph()), "B3 edges");
    return std::to_string(a.edges.size()) + " and " + std::to_string(b.edges.size()) + " edges";
}

std::string affine_tamari_case() {
    Lattice l = affine_tamari();
    require(brute_isomorphic(l.poset(), affine_tamari_drawing()), "differs from the drawing");
    auto atoms = l.atoms();
    require(atoms.size() == 3, "three atoms");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) require(t_value(l, atoms[i], atoms[j]) == 5, "t value");
    require(not_coxeter_quotient(l).obstructed, "not obstructed");
    WeightedQuiver cycle = make_quiver({1, 1, 1}, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    require(quiver_iso_key(quiver_from_lattice(l, CoxeterType::A).quiver) == quiver_iso_key(cycle), "quiver");
    return "t = 5,5,5; oriented 3-cycle";
}

std::string census() {
    Census c = associahedron_census();
    require(graphs_isomorphic(associahedron_graph(), glued_associahedron_graph()), "glued graph");
    require(c.classes.size() == 8, std::to_string(c.classes.size()) + " classes");
    std::map<std::string, int> kinds;
    for (const auto& k : c.classes) {
        std::string kind = k.classification.rfind("cambrian", 0) == 0 ? "cambrian"
                           : k.classification.rfind("badcase-1", 0) == 0 ? "badcase-1"
                           : k.classification.rfind("badcase-2", 0) == 0 ? "badcase-2"
                                                                          : k.classification;
        ++kinds[kind];
        if (kind.rfind("badcase", 0) == 0) {
            require(k.regular_degree == std::optional<std::size_t>{3}, "bad case not 3-regular");
            require(!k.locally_mutable, "bad case locally mutable");
        }
    }
    require(kinds["cambrian"] == 3 && kinds["affine-tamari"] == 1 && kinds["badcase-1"] == 2 && kinds["badcase-2"] == 2,
            "classification");
    return std::to_string(c.lattices) + " lattice orientations, 8 classes";
}

std::string property_suites() {
    Rng rng(8001);
    // Flips invert and preserve D.
    for (int trial = 0; trial < 400; ++trial) {
        auto host = share(random_connected_poset(2 + static_cast<std::size_t>(trial % 7), 0.4, rng));
        FlipPair pair = random_flip_pair(host, rng);
        Poset flipped = flip(pair);
        require(flip(dual_flip(pair)) == *host, "involution");
        auto before = brute_distance(*host), after = brute_distance(flipped);
        const std::size_t n = host->size();
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y)
                for (Elem z = 0; z < n; ++z)
                    require(big_d(before, x, y, z) == big_d(after, x, y, z), "D invariance");
    }
    // Flip graph is the Hasse graph.
    for (int trial = 0; trial < 100; ++trial) {
        Poset p = random_connected_poset(2 + static_cast<std::size_t>(trial % 6), 0.4, rng);
        FlipGraph g = flip_graph(p);
        std::set<std::pair<Elem, Elem>> hasse;
        for (auto [x, y] : p.covers()) hasse.emplace(std::min(x, y), std::max(x, y));
        require(std::set<std::pair<Elem, Elem>>(g.edges.begin(), g.edges.end()) == hasse, "flip graph");
        for (Elem x = 0; x < p.size(); ++x)
            for (Elem y = 0; y < p.size(); ++y) require(g.vertices[x].leq(x, y), "rerooted minimum");
    }
    // Fault planes of mutations are isomorphic through x -> x v a.
    std::vector<Lattice> samples;
    for (std::size_t n = 1; n <= 7; ++n)
        for (auto& l : all_lattices(n)) samples.push_back(std::move(l));
    for (int i = 0; i < 300; ++i) samples.push_back(random_lattice(8 + static_cast<std::size_t>(i % 3), rng));
    std::size_t mutations_seen = 0;
    for (const auto& l : samples)
        for (const auto& ac : ac_correspondences(l)) {
            FlipPair pair = ac_flip_pair(l, ac);
            if (!brute_is_lattice(flip(pair))) continue;
            ++mutations_seen;
            FaultPlanes f = fault_planes(pair);
            std::set<Elem> image;
            for (Elem x : members(f.da)) {
                Elem y = l.join(x, ac.a);
                require(f.db.test(y) && l.meet(y, ac.a_prime) == x, "fault plane map");
                image.insert(y);
                for (Elem z : members(f.da)) require(l.leq(x, z) == l.leq(y, l.join(z, ac.a)), "fault plane order");
            }
            require(image.size() == f.db.count(), "fault plane bijection");
        }
    // Mutable lattices are semidistributive.
    std::size_t mutable_seen = 0;
    for (const auto& l : samples) {
        MutabilityReport r = is_mutable(l, 5000);
        if (!r.is_mutable) continue;
        ++mutable_seen;
        require(brute_semidistributive(l.poset()), "mutable but not semidistributive");
    }
    // Pattern classes are the fibres of eta.
    for (int n = 1; n <= 3; ++n) {
        WeakOrder w = build_weak_order(CoxeterType::A, n);
        for (const auto& o : all_orientations(CoxeterType::A, n)) {
            LabelledPolygon p = polygon_from_orientation(o);
            for (Elem x = 0; x < w.size(); ++x) {
                PermA sx{w.images(x)};
                std::set<std::vector<int>> cls;
                for (const auto& c : pattern_class(p, sx)) cls.insert(c.images);
                for (Elem y = 0; y < w.size(); ++y)
                    require((eta(p, sx) == eta(p, PermA{w.images(y)})) == (cls.count(w.images(y)) == 1), "eta kernel");
            }
        }
    }
    return std::to_string(mutations_seen) + " mutations, " + std::to_string(mutable_seen) + " mutable lattices";
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "cambrian-drawings", 1.0, cambrian_drawings},
        {2, "mutation-iff-lattice", 120.0, mutation_iff_lattice},
        {3, "weak-order-mutation", 30.0, weak_order_mutations},
        {4, "cambrian-mutation-and-quiver", 120.0, cambrian_mutations},
        {5, "mutation-graphs", 60.0, mutation_graphs},
        {6, "affine-tamari", 5.0, affine_tamari_case},
        {7, "associahedron-census", 300.0, census},
        {8, "property-suites", 180.0, property_suites},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            o.detail = c.body();
        } catch (const Failure& f) {
            o = {false, f.what};
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && elapsed > c.limit_seconds) o = {false, o.detail + "; over the time limit"};
        std::printf("%s [%d] %s (%s; %.2fs of %.0fs)\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    o.detail.c_str(), elapsed, c.limit_seconds);
        std::fflush(stdout);
        failures += !o.ok;
    }
    return failures == 0 ? 0 : 1;
}
