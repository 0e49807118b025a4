#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

#include "latmut/cambrian.hpp"
#include "latmut/canonical.hpp"
#include "latmut/census.hpp"
#include "latmut/distance.hpp"
#include "latmut/exploration.hpp"
#include "latmut/flip.hpp"
#include "latmut/generate.hpp"
#include "latmut/mutation.hpp"
#include "latmut/reference.hpp"

namespace latmut::cli {

namespace {

// Runs body(i) for i in [0, count); failures are reported per index.
std::vector<std::string> parallel_cases(std::size_t count, unsigned threads,
                                        const std::function<void(std::size_t)>& body) {
    std::vector<std::string> failures(count);
    auto worker = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < count; i += stride) {
            try {
                body(i);
            } catch (const std::exception& e) {
                failures[i] = e.what();
            }
        }
    };
    threads = std::max(1u, threads);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t, threads);
    worker(0, threads);
    for (auto& th : pool) th.join();
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i)
        if (!failures[i].empty()) out.push_back("case " + std::to_string(i) + ": " + failures[i]);
    return out;
}

CheckResult from_failures(std::string name, const std::vector<std::string>& failures, std::size_t cases) {
    CheckResult r{std::move(name), failures.empty(), {}};
    r.detail = failures.empty() ? std::to_string(cases) + " cases" : failures.front();
    return r;
}

CheckResult check(std::string name, const std::function<std::string()>& body) {
    try {
        std::string detail = body();
        return {std::move(name), true, detail};
    } catch (const std::exception& e) {
        return {std::move(name), false, e.what()};
    }
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

std::vector<CheckResult> flip_suite(std::uint64_t seed, unsigned threads) {
    std::vector<CheckResult> out;
    const std::size_t cases = 200;
    auto iff = parallel_cases(cases, threads, [&](std::size_t i) {
        Rng rng(seed + i);
        Lattice l = random_lattice(5 + i % 5, rng);
        for (const auto& ac : ac_correspondences(l)) check_mutation(l, ac_flip_pair(l, ac), true);
        auto host = std::make_shared<const Poset>(l.poset());
        for (int k = 0; k < 3; ++k) check_mutation(l, random_flip_pair(host, rng), true);
    });
    out.push_back(from_failures("flip/mutation-iff", iff, cases));

    auto inv = parallel_cases(cases, threads, [&](std::size_t i) {
        Rng rng(seed + 1000 + i);
        auto host = std::make_shared<const Poset>(random_connected_poset(3 + i % 6, 0.4, rng));
        FlipPair pair = random_flip_pair(host, rng);
        Poset flipped = flip(pair);
        require(flip(dual_flip(pair)) == *host, "flip of the dual flip must restore the poset");
        DistanceTable before(*host), after(flipped);
        const std::size_t n = host->size();
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y)
                for (Elem z = 0; z < n; ++z)
                    require(before.big_d(x, y, z) == after.big_d(x, y, z), "D must be flip invariant");
        flip_graph(*host);
    });
    out.push_back(from_failures("flip/involution-d-invariance-flip-graph", inv, cases));
    return out;
}

std::vector<CheckResult> coxeter_suite() {
    std::vector<CheckResult> out;
    for (auto [type, n] : {std::pair{CoxeterType::A, 2}, std::pair{CoxeterType::A, 3},
                           std::pair{CoxeterType::B, 2}, std::pair{CoxeterType::B, 3}}) {
        std::string name = std::string("coxeter/weak-mutation-") + type_letter(type) + std::to_string(n);
        out.push_back(check(name, [type, n] {
            WeakOrder w = build_weak_order(type, n);
            for (int g = 1; g <= n; ++g) {
                auto m = weak_order_mutation(w, g);
                require(are_isomorphic(m.mutated.poset(), w.lattice().poset()), "mutated weak order must be isomorphic");
            }
            return std::to_string(w.size()) + " elements";
        }));
    }
    return out;
}

std::vector<CheckResult> cambrian_suite() {
    std::vector<CheckResult> out;
    out.push_back(check("cambrian/sizes-and-direct", [] {
        const std::size_t catalan[] = {1, 2, 5, 14, 42};
        const std::size_t central[] = {1, 2, 6, 20};
        for (int n = 1; n <= 4; ++n)
            for (const auto& o : all_orientations(CoxeterType::A, n)) {
                Cambrian c = build_cambrian(o);
                require(c.lattice.size() == catalan[n], "type-A Cambrian size");
                require(direct_cambrian(o) == c.lattice, "direct construction must agree");
            }
        for (int n = 1; n <= 3; ++n)
            for (const auto& o : all_orientations(CoxeterType::B, n)) {
                Cambrian c = build_cambrian(o);
                require(c.lattice.size() == central[n], "type-B Cambrian size");
                require(direct_cambrian(o) == c.lattice, "direct construction must agree");
            }
        return std::string("A1-A4, B1-B3");
    }));
    out.push_back(check("cambrian/quiver-commutation", [] {
        std::size_t checked = 0;
        for (auto [type, cap] : {std::pair{CoxeterType::A, 4}, std::pair{CoxeterType::B, 3}})
            for (int n = 1; n <= cap; ++n)
                for (const auto& o : all_orientations(type, n)) {
                    Cambrian c = build_cambrian(o);
                    auto atoms = atoms_by_vertex(c);
                    auto q = orientation_to_quiver(o);
                    require(quiver_from_lattice(c.lattice, type, atoms).quiver == q, "quiver recovery");
                    for (int i = 1; i <= n; ++i) {
                        Lattice m = as_lattice(flip_on_atom(c.lattice.poset(), atoms[static_cast<std::size_t>(i - 1)]));
                        auto order = mutated_atom_order(c.lattice, atoms, static_cast<std::size_t>(i - 1), m);
                        require(quiver_from_lattice(m, type, order).quiver == mutate_quiver(q, i - 1),
                                "quiver of a mutation must be the mutated quiver");
                        if (is_sink_or_source(o, i))
                            require(are_isomorphic(m.poset(), build_cambrian(reflect(o, i)).lattice.poset()),
                                    "sink/source mutation must give the reflected Cambrian lattice");
                        ++checked;
                    }
                }
        return std::to_string(checked) + " mutations";
    }));
    out.push_back(check("cambrian/pattern-kernel", [] {
        for (int n = 1; n <= 3; ++n)
            for (const auto& o : all_orientations(CoxeterType::A, n)) {
                LabelledPolygon p = polygon_from_orientation(o);
                WeakOrder w = build_weak_order(CoxeterType::A, n);
                for (Elem x = 0; x < w.size(); ++x)
                    for (Elem y = 0; y < w.size(); ++y) {
                        PermA sx{w.images(x)}, sy{w.images(y)};
                        require(pattern_kernel_equal(p, sx, sy) == (eta(p, sx) == eta(p, sy)),
                                "pattern classes must be the fibres of eta");
                    }
            }
        return std::string("A1-A3 exhaustive");
    }));
    out.push_back(check("cambrian/mutation-graphs", [] {
        auto a = mutation_graph(tamari_a3());
        require(a.size() == 4 && verify_ordovician_conjectures(a, CoxeterType::A).all_pass, "A3 graph");
        auto b = mutation_graph(build_cambrian(make_orientation(CoxeterType::B, 3, "RR")).lattice);
        require(b.size() == 5 && verify_ordovician_conjectures(b, CoxeterType::B).all_pass, "B3 graph");
        return std::string("4 and 5 classes");
    }));
    return out;
}

std::vector<CheckResult> census_suite() {
    std::vector<CheckResult> out;
    out.push_back(check("census/associahedron", [] {
        Census c = associahedron_census();
        require(c.classes.size() == 8, "expected 8 lattice classes, got " + std::to_string(c.classes.size()));
        std::size_t bad = 0;
        for (const auto& k : c.classes) {
            require(k.classification != "unclassified", "unclassified census lattice");
            if (k.classification.rfind("badcase", 0) == 0) {
                ++bad;
                require(k.regular_degree == 3u && !k.locally_mutable, "bad cases are 3-regular, not locally mutable");
            }
        }
        require(bad == 4, "expected two bad-case pairs");
        return std::to_string(c.lattices) + " lattice orientations";
    }));
    return out;
}

}  // namespace

std::vector<std::string> suite_names() { return {"all", "flip", "coxeter", "cambrian", "census"}; }

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed, unsigned threads) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> r) { out.insert(out.end(), r.begin(), r.end()); };
    bool all = suite == "all";
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw std::invalid_argument("unknown suite: " + suite);
    if (all || suite == "flip") append(flip_suite(seed, threads));
    if (all || suite == "coxeter") append(coxeter_suite());
    if (all || suite == "cambrian") append(cambrian_suite());
    if (all || suite == "census") append(census_suite());
    return out;
}

}  // namespace latmut::cli
