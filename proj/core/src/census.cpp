#include "latmut/census.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include <json.hpp>

#include "latmut/cambrian.hpp"
#include "latmut/canonical.hpp"
#include "latmut/mutation.hpp"
#include "latmut/reference.hpp"

namespace latmut {

Graph make_graph(std::size_t n, std::vector<std::pair<Elem, Elem>> edges) {
    for (auto& [a, b] : edges) {
        if (a >= n || b >= n) throw IndexOutOfRange("graph vertex out of range");
        if (a == b) throw PreconditionFailed("graph loops are not allowed");
        if (b < a) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw PreconditionFailed("duplicate graph edge");
    return Graph{n, std::move(edges)};
}

Graph associahedron_graph() {
    Lattice t = tamari_a3();
    return make_graph(t.size(), hasse_edges(t.poset()));
}

Graph glued_associahedron_graph() {
    // Part: V0=0, V1A..V1C=1..3, shared V2A..V2F=4..9; the second copy maps 0..3 to 10..13.
    const std::vector<std::pair<Elem, Elem>> own{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {5, 2},
                                                 {2, 6}, {7, 3}, {3, 8}, {9, 1}};
    const std::vector<std::pair<Elem, Elem>> shared{{4, 5}, {6, 7}, {8, 9}};
    auto second = [](Elem v) { return v < 4 ? v + 10 : v; };
    std::vector<std::pair<Elem, Elem>> edges = shared;
    for (auto [a, b] : own) {
        edges.emplace_back(a, b);
        edges.emplace_back(second(a), second(b));
    }
    return make_graph(14, std::move(edges));
}

namespace {

Poset incidence_poset(const Graph& g) {
    Relation rel;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        rel.emplace_back(g.edges[k].first, g.n + k);
        rel.emplace_back(g.edges[k].second, g.n + k);
    }
    return poset_from_covers(g.n + g.edges.size(), rel);
}

}  // namespace

bool graphs_isomorphic(const Graph& g, const Graph& h) {
    if (g.n != h.n || g.edges.size() != h.edges.size()) return false;
    return canonical_form(incidence_poset(g)) == canonical_form(incidence_poset(h));
}

std::size_t cycle_count(const Graph& g, std::size_t length) {
    if (length < 3) return 0;
    std::vector<std::vector<Elem>> adj(g.n);
    for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::size_t count = 0;
    std::vector<char> on_path(g.n, 0);
    for (Elem start = 0; start < g.n; ++start) {
        auto dfs = [&](auto&& self, Elem v, std::size_t depth) -> void {
            for (Elem w : adj[v]) {
                if (w == start && depth == length) ++count;
                if (w <= start || on_path[w] || depth >= length) continue;
                on_path[w] = 1;
                self(self, w, depth + 1);
                on_path[w] = 0;
            }
        };
        on_path[start] = 1;
        dfs(dfs, start, 1);
        on_path[start] = 0;
    }
    return count / 2;
}

namespace {

std::map<std::string, std::string> reference_forms() {
    std::map<std::string, std::string> names;
    auto name = [&](const Poset& p, const std::string& n) { names.emplace(canonical_form(p), n); };
    for (const auto& o : all_orientations(CoxeterType::A, 3)) {
        bool uniform = std::adjacent_find(o.right.begin(), o.right.end(), std::not_equal_to<>()) == o.right.end();
        name(build_cambrian(o).lattice.poset(), uniform ? "cambrian-tamari" : "cambrian-" + orientation_spec(o));
    }
    name(affine_tamari().poset(), "affine-tamari");
    name(badcase_1().poset(), "badcase-1");
    name(dual(badcase_1().poset()), "badcase-1-dual");
    name(badcase_2().poset(), "badcase-2");
    name(dual(badcase_2().poset()), "badcase-2-dual");
    return names;
}

bool acyclic(const std::vector<std::uint64_t>& out, std::size_t n) {
    std::vector<int> indeg(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::uint64_t m = out[v]; m; m &= m - 1) ++indeg[static_cast<std::size_t>(std::countr_zero(m))];
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < n; ++v)
        if (!indeg[v]) stack.push_back(v);
    std::size_t seen = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        ++seen;
        for (std::uint64_t m = out[v]; m; m &= m - 1) {
            auto w = static_cast<std::size_t>(std::countr_zero(m));
            if (--indeg[w] == 0) stack.push_back(w);
        }
    }
    return seen == n;
}

}  // namespace

Census orientation_census(const Graph& g) {
    const std::size_t n = g.n, m = g.edges.size();
    if (n > 64 || m > 40) throw PreconditionFailed("graph too large for the orientation census");
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    std::vector<char> reversed(m, 0);
    for (auto [a, b] : g.edges) {
        ++outdeg[a];
        ++indeg[b];
    }
    auto count_zero = [](const std::vector<int>& d) {
        return static_cast<std::size_t>(std::count(d.begin(), d.end(), 0));
    };
    std::size_t sources = count_zero(indeg), sinks = count_zero(outdeg);

    Census census;
    std::map<std::string, CensusClass> classes;
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t k = 0; k < total; ++k) {
        if (k > 0) {
            auto e = static_cast<std::size_t>(std::countr_zero(k));
            Elem lo = reversed[e] ? g.edges[e].second : g.edges[e].first;
            Elem hi = reversed[e] ? g.edges[e].first : g.edges[e].second;
            auto source = [&](Elem v) { return indeg[v] == 0 ? std::size_t{1} : std::size_t{0}; };
            auto sink = [&](Elem v) { return outdeg[v] == 0 ? std::size_t{1} : std::size_t{0}; };
            sources -= source(lo) + source(hi);
            sinks -= sink(lo) + sink(hi);
            --outdeg[lo];
            --indeg[hi];
            ++outdeg[hi];
            ++indeg[lo];
            sources += source(lo) + source(hi);
            sinks += sink(lo) + sink(hi);
            reversed[e] = !reversed[e];
        }
        ++census.orientations;
        if (sources != 1 || sinks != 1) continue;
        ++census.single_source_sink;
        std::vector<std::uint64_t> out(n, 0);
        Relation rel;
        for (std::size_t e = 0; e < m; ++e) {
            Elem a = reversed[e] ? g.edges[e].second : g.edges[e].first;
            Elem b = reversed[e] ? g.edges[e].first : g.edges[e].second;
            out[a] |= std::uint64_t{1} << b;
            rel.emplace_back(a, b);
        }
        if (!acyclic(out, n)) continue;
        ++census.acyclic;
        Poset p = poset_from_covers(n, rel);
        if (p.cover_count() != m) continue;
        auto l = try_as_lattice(p);
        if (!l) continue;
        ++census.lattices;
        std::string form = canonical_form(p);
        auto [it, fresh] = classes.try_emplace(form);
        if (fresh) {
            it->second.canonical = form;
            it->second.size = n;
            it->second.representative = *l;
        }
        ++it->second.orientations;
    }

    auto names = reference_forms();
    for (auto& [form, c] : classes) {
        auto it = names.find(form);
        c.classification = it == names.end() ? "unclassified" : it->second;
        c.locally_mutable = is_locally_mutable(c.representative);
        auto deg = hasse_degrees(c.representative.poset());
        if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) == deg.end() && !deg.empty())
            c.regular_degree = deg.front();
        census.classes.push_back(std::move(c));
    }
    return census;
}

Census associahedron_census() {
    Graph g = associahedron_graph();
    ensure(graphs_isomorphic(g, glued_associahedron_graph()), "Tamari Hasse graph must match the gluing");
    return orientation_census(g);
}

std::string census_to_json(const Census& c) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& k : c.classes) {
        nlohmann::json j;
        j["canonical"] = k.canonical;
        j["size"] = k.size;
        j["classification"] = k.classification;
        j["locally_mutable"] = k.locally_mutable;
        j["regular_degree"] = k.regular_degree ? nlohmann::json(*k.regular_degree) : nlohmann::json(nullptr);
        j["orientations"] = k.orientations;
        classes.push_back(j);
    }
    return classes.dump(2) + "\n";
}

}  // namespace latmut
