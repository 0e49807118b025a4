#include "latmut/flip.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace latmut {

FlipPair::FlipPair(std::shared_ptr<const Poset> host, Bitset footwall)
    : host_(std::move(host)), a_(std::move(footwall)) {
    const std::size_t n = host_->size();
    if (a_.size() != n) throw PreconditionFailed("footwall size differs from poset size");
    b_ = ~a_;
    if (a_.none()) throw EmptySide("flip pair footwall A is empty");
    if (b_.none()) throw EmptySide("flip pair hanging wall B is empty");
    for (auto x = a_.find_first(); x != Bitset::npos; x = a_.find_next(x)) {
        Bitset below = host_->down_set(x) & b_;
        auto y = below.find_first();
        if (y != Bitset::npos) throw NoDescentViolated(x, y);
    }
    for (auto x = a_.find_first(); x != Bitset::npos; x = a_.find_next(x))
        ensure(host_->down_set(x).is_subset_of(a_), "footwall must be down-closed");
    for (auto y = b_.find_first(); y != Bitset::npos; y = b_.find_next(y))
        ensure(host_->up_set(y).is_subset_of(b_), "hanging wall must be up-closed");
}

FlipPair make_flip_pair(const Poset& p, const std::vector<Elem>& a) {
    return FlipPair(std::make_shared<const Poset>(p), make_set(p.size(), a));
}

FlipPair make_flip_pair(std::shared_ptr<const Poset> p, const Bitset& a) {
    return FlipPair(std::move(p), a);
}

FlipPair upset_flip_pair(std::shared_ptr<const Poset> p, Elem x) {
    Bitset a = ~p->up_set(x);
    return FlipPair(std::move(p), a);
}

Poset flip(const FlipPair& pair) {
    const Poset& p = pair.host();
    Relation rel;
    for (auto [x, y] : p.covers()) {
        if (pair.in_a(x) && pair.in_b(y))
            rel.emplace_back(y, x);
        else
            rel.emplace_back(x, y);
    }
    Poset out = poset_from_covers(p.size(), rel, p.labels());
    ensure(out.cover_count() == rel.size(), "flipped covers must stay irredundant");
    return out;
}

FlipPair dual_flip(const FlipPair& pair) {
    auto flipped = std::make_shared<const Poset>(flip(pair));
    return FlipPair(std::move(flipped), pair.hanging_wall());
}

FaultPlanes fault_planes(const FlipPair& pair) {
    const Poset& p = pair.host();
    FaultPlanes f{Bitset(p.size()), Bitset(p.size())};
    for (auto [x, y] : p.covers()) {
        if (pair.in_a(x) && pair.in_b(y)) {
            f.da.set(x);
            f.db.set(y);
        }
    }
    return f;
}

Poset flip_on_atom(const Poset& p, Elem a) {
    auto least = least_element(p);
    if (!least) throw PreconditionFailed("flip on atom needs a least element");
    if (!p.is_cover(*least, a))
        throw PreconditionFailed("element " + std::to_string(a) + " is not an atom");
    return flip(upset_flip_pair(std::make_shared<const Poset>(p), a));
}

Reroot reroot(const Poset& p, Elem x) {
    if (!is_connected(p)) throw Disconnected("reroot needs a connected poset");
    if (x >= p.size()) throw IndexOutOfRange("reroot target out of range");
    auto cur = std::make_shared<const Poset>(p);
    std::vector<FlipStep> steps;
    std::size_t obstruction = p.size() - p.up_set(x).count();
    while (obstruction > 0) {
        const Bitset& up = cur->up_set(x);
        FlipStep step{{}, 0, 0};
        bool found = false;
        for (auto [u, v] : cur->covers()) {
            if (!up.test(u) && up.test(v)) {
                step.u = u;
                step.v = v;
                found = true;
                break;
            }
        }
        ensure(found, "reroot: connected poset must have a cover entering {w >= x}");
        FlipPair pair = upset_flip_pair(cur, x);
        step.a = pair.a();
        auto next = std::make_shared<const Poset>(flip(pair));
        std::size_t next_obstruction = next->size() - next->up_set(x).count();
        ensure(next_obstruction < obstruction, "reroot: obstruction set must shrink");
        obstruction = next_obstruction;
        cur = std::move(next);
        steps.push_back(std::move(step));
    }
    return {*cur, std::move(steps)};
}

FlipGraph flip_graph(const Poset& p) {
    FlipGraph g;
    const std::size_t n = p.size();
    g.vertices.reserve(n);
    for (Elem x = 0; x < n; ++x) g.vertices.push_back(reroot(p, x).poset);
    std::set<std::pair<Elem, Elem>> edges;
    for (Elem x = 0; x < n; ++x) {
        for (Elem y : g.vertices[x].upper_covers(x)) {
            ensure(flip_on_atom(g.vertices[x], y) == g.vertices[y],
                   "flip graph: flipping on an atom must land on the rerooted poset");
            edges.emplace(std::min(x, y), std::max(x, y));
        }
    }
    g.edges.assign(edges.begin(), edges.end());
    ensure(g.edges == hasse_edges(p), "flip graph must match the undirected Hasse graph");
    return g;
}

std::vector<Elem> bgp_factorization(const FlipPair& pair) {
    const Poset& p = pair.host();
    std::vector<Elem> seq;
    for (Elem x : linear_extension(p))
        if (pair.in_a(x)) seq.push_back(x);

    // Hasse digraph with edges pointing down: (from, to) = (upper, lower).
    std::set<std::pair<Elem, Elem>> edges;
    for (auto [x, y] : p.covers()) edges.emplace(y, x);
    for (Elem v : seq) {
        bool sink = std::none_of(edges.begin(), edges.end(),
                                 [v](const auto& e) { return e.first == v; });
        ensure(sink, "BGP reflection applied at a non-sink");
        std::set<std::pair<Elem, Elem>> next;
        for (auto [s, t] : edges) {
            if (s == v || t == v)
                next.emplace(t, s);
            else
                next.emplace(s, t);
        }
        edges = std::move(next);
    }
    std::set<std::pair<Elem, Elem>> expected;
    for (auto [x, y] : flip(pair).covers()) expected.emplace(y, x);
    ensure(edges == expected, "BGP reflections must reproduce the flip");
    return seq;
}

std::string flip_pair_to_json(const FlipPair& pair) {
    nlohmann::json j;
    j["A"] = pair.a();
    return j.dump() + "\n";
}

FlipPair flip_pair_from_json(const Poset& p, const std::string& text) {
    std::vector<Elem> a;
    try {
        auto j = nlohmann::json::parse(text);
        for (const auto& v : j.at("A")) {
            auto x = v.get<long long>();
            if (x < 0) throw ParseError("flip pair JSON: negative index");
            a.push_back(static_cast<Elem>(x));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("flip pair JSON: ") + e.what());
    }
    return make_flip_pair(p, a);
}

std::string flip_steps_to_json(const std::vector<FlipStep>& steps) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : steps) j.push_back({{"A", s.a}});
    return j.dump() + "\n";
}

}  // namespace latmut
