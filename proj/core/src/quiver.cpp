#include "latmut/quiver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace latmut {

int WeightedQuiver::multiplicity(int from, int to) const {
    auto it = edges.find({from, to});
    return it == edges.end() ? 0 : it->second;
}

WeightedQuiver make_quiver(std::vector<int> weights,
                           const std::vector<std::tuple<int, int, int>>& edges) {
    WeightedQuiver q;
    q.weights = std::move(weights);
    for (int w : q.weights)
        if (w != 1 && w != 2) throw PreconditionFailed("vertex weights must be 1 or 2");
    const int n = q.size();
    for (auto [from, to, mult] : edges) {
        if (from < 0 || to < 0 || from >= n || to >= n) throw PreconditionFailed("edge vertex out of range");
        if (from == to) throw PreconditionFailed("quiver loops are not allowed");
        if (mult <= 0) throw PreconditionFailed("edge multiplicity must be positive");
        q.edges[{from, to}] += mult;
    }
    for (const auto& [e, m] : q.edges)
        if (q.edges.count({e.second, e.first}))
            throw PreconditionFailed("quiver 2-cycles are not allowed");
    return q;
}

WeightedQuiver mutate_quiver(const WeightedQuiver& q, int i) {
    const int n = q.size();
    if (i < 0 || i >= n) throw PreconditionFailed("mutation vertex out of range");
    auto d = [&](int x, int y) { return std::gcd(q.weights[static_cast<std::size_t>(x)],
                                                 q.weights[static_cast<std::size_t>(y)]); };
    std::map<std::pair<int, int>, int> next;
    for (const auto& [e, m] : q.edges) {
        if (e.first == i || e.second == i)
            next[{e.second, e.first}] += m;
        else
            next[e] += m;
    }
    for (const auto& [in, p] : q.edges) {
        if (in.second != i) continue;
        int j = in.first;
        for (const auto& [out, r] : q.edges) {
            if (out.first != i) continue;
            int k = out.second;
            if (k == j) continue;
            int num = p * r * d(j, k) * q.weights[static_cast<std::size_t>(i)];
            int den = d(j, i) * d(i, k);
            ensure(num % den == 0, "weighted quiver multiplier must be an integer");
            next[{j, k}] += num / den;
        }
    }
    WeightedQuiver out;
    out.weights = q.weights;
    for (const auto& [e, m] : next) {
        if (e.first > e.second) continue;
        int fwd = m;
        auto rev_it = next.find({e.second, e.first});
        int rev = rev_it == next.end() ? 0 : rev_it->second;
        int c = std::min(fwd, rev);
        if (fwd > c) out.edges[e] = fwd - c;
        if (rev > c) out.edges[{e.second, e.first}] = rev - c;
    }
    for (const auto& [e, m] : next) {
        if (e.first < e.second) continue;
        if (!next.count({e.second, e.first})) out.edges[e] = m;
    }
    return out;
}

SinksSources sinks_sources(const WeightedQuiver& q) {
    SinksSources s;
    for (int v = 0; v < q.size(); ++v) {
        bool in = false, out = false;
        for (const auto& [e, m] : q.edges) {
            out = out || e.first == v;
            in = in || e.second == v;
        }
        if (in && !out) s.sinks.push_back(v);
        if (out && !in) s.sources.push_back(v);
    }
    return s;
}

CoxeterOrientation make_orientation(CoxeterType type, int n, const std::string& dirs) {
    if (n < 1) throw PreconditionFailed("rank must be at least 1");
    if (static_cast<int>(dirs.size()) != n - 1)
        throw ParseError("orientation needs " + std::to_string(n - 1) + " letters, got \"" + dirs + "\"");
    CoxeterOrientation o{type, n, {}};
    for (char c : dirs) {
        if (c == 'R' || c == 'r')
            o.right.push_back(true);
        else if (c == 'L' || c == 'l')
            o.right.push_back(false);
        else
            throw ParseError(std::string("orientation letter must be R or L, got ") + c);
    }
    return o;
}

std::string dirs_string(const CoxeterOrientation& o) {
    std::string s;
    for (bool r : o.right) s += r ? 'R' : 'L';
    return s;
}

std::vector<CoxeterOrientation> all_orientations(CoxeterType type, int n) {
    std::vector<CoxeterOrientation> out;
    const int edges = n - 1;
    for (int mask = 0; mask < (1 << edges); ++mask) {
        CoxeterOrientation o{type, n, {}};
        for (int e = 0; e < edges; ++e) o.right.push_back(((mask >> (edges - 1 - e)) & 1) == 0);
        out.push_back(o);
    }
    return out;
}

bool is_sink_or_source(const CoxeterOrientation& o, int v) {
    if (v < 1 || v > o.n) throw PreconditionFailed("vertex out of range");
    // Edge v-1 -- v points into v when right; edge v -- v+1 points into v when left.
    std::vector<bool> into;
    if (v > 1) into.push_back(o.right[static_cast<std::size_t>(v - 2)]);
    if (v < o.n) into.push_back(!o.right[static_cast<std::size_t>(v - 1)]);
    return std::adjacent_find(into.begin(), into.end(), std::not_equal_to<>()) == into.end();
}

CoxeterOrientation reflect(const CoxeterOrientation& o, int v) {
    if (!is_sink_or_source(o, v)) throw PreconditionFailed("vertex is neither a sink nor a source");
    CoxeterOrientation r = o;
    if (v > 1) r.right[static_cast<std::size_t>(v - 2)] = !r.right[static_cast<std::size_t>(v - 2)];
    if (v < o.n) r.right[static_cast<std::size_t>(v - 1)] = !r.right[static_cast<std::size_t>(v - 1)];
    return r;
}

CoxeterOrientation reverse_all(const CoxeterOrientation& o) {
    CoxeterOrientation r = o;
    for (std::size_t i = 0; i < r.right.size(); ++i) r.right[i] = !r.right[i];
    return r;
}

WeightedQuiver orientation_to_quiver(const CoxeterOrientation& o) {
    std::vector<int> weights(static_cast<std::size_t>(o.n), 1);
    if (o.type == CoxeterType::B)
        for (int v = 1; v < o.n; ++v) weights[static_cast<std::size_t>(v)] = 2;
    std::vector<std::tuple<int, int, int>> edges;
    for (int i = 0; i + 1 < o.n; ++i) {
        if (o.right[static_cast<std::size_t>(i)])
            edges.emplace_back(i, i + 1, 1);
        else
            edges.emplace_back(i + 1, i, 1);
    }
    return make_quiver(std::move(weights), edges);
}

std::vector<int> sink_source_reflection_path(const CoxeterOrientation& o1,
                                             const CoxeterOrientation& o2) {
    if (o1.type != o2.type || o1.n != o2.n) throw PreconditionFailed("orientations differ in type or rank");
    std::map<std::vector<bool>, std::pair<std::vector<bool>, int>> parent;
    std::deque<CoxeterOrientation> queue{o1};
    parent[o1.right] = {o1.right, 0};
    while (!queue.empty()) {
        CoxeterOrientation cur = queue.front();
        queue.pop_front();
        if (cur.right == o2.right) break;
        for (int v = 1; v <= cur.n; ++v) {
            if (!is_sink_or_source(cur, v)) continue;
            CoxeterOrientation next = reflect(cur, v);
            if (parent.emplace(next.right, std::make_pair(cur.right, v)).second) queue.push_back(next);
        }
    }
    ensure(parent.count(o2.right) == 1, "sink/source reflections must connect all orientations");
    std::vector<int> path;
    for (auto cur = o2.right; cur != o1.right;) {
        const auto& [prev, v] = parent.at(cur);
        path.push_back(v);
        cur = prev;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

LatticeQuiver quiver_from_lattice(const Lattice& l, CoxeterType type,
                                  std::optional<std::vector<Elem>> atom_order) {
    LatticeQuiver out;
    out.atoms = atom_order ? *atom_order : l.atoms();
    auto sorted_atoms = l.atoms();
    {
        auto given = out.atoms;
        std::sort(given.begin(), given.end());
        if (given != sorted_atoms) throw PreconditionFailed("atom order must list every atom once");
    }
    const int n = static_cast<int>(out.atoms.size());
    const Poset& p = l.poset();
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    std::vector<std::tuple<int, int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Elem a = out.atoms[static_cast<std::size_t>(i)];
            Elem b = out.atoms[static_cast<std::size_t>(j)];
            Elem top = l.join(a, b);
            Lattice sub = as_lattice(interval(p, l.bottom(), top).poset);
            auto poly = is_polygon(sub);
            if (!poly || poly->first != 2) throw NotPolygonal(a, b);
            const int len = static_cast<int>(poly->second);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = len;
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = len;
            if (len < 3) continue;
            auto chain_a = static_cast<int>((p.up_set(a) & p.down_set(top)).count());
            if (chain_a == len)
                edges.emplace_back(i, j, 1);
            else
                edges.emplace_back(j, i, 1);
        }

    std::vector<int> weights(static_cast<std::size_t>(n), 1);
    if (type == CoxeterType::B && n >= 2) {
        std::vector<std::vector<int>> fits;
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> w(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) w[static_cast<std::size_t>(v)] = ((mask >> (n - 1 - v)) & 1) ? 2 : 1;
            if (std::count(w.begin(), w.end(), 2) != n - 1) continue;
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = i + 1; j < n && ok; ++j) {
                    int len = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    int wi = w[static_cast<std::size_t>(i)], wj = w[static_cast<std::size_t>(j)];
                    if (len == 3) ok = wi == wj;
                    else if (len == 4) ok = wi != wj;
                    else if (len > 4) ok = false;
                }
            if (ok) fits.push_back(w);
        }
        if (fits.empty()) throw PreconditionFailed("type-B weight constraints are unsatisfiable");
        std::sort(fits.begin(), fits.end());
        if (n >= 3 && fits.size() > 1) throw PreconditionFailed("type-B weights are not pinned down");
        weights = fits.front();
    }
    out.quiver = make_quiver(std::move(weights), edges);
    return out;
}

std::string quiver_iso_key(const WeightedQuiver& q) {
    const int n = q.size();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) w[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = q.weights[static_cast<std::size_t>(v)];
        std::vector<std::tuple<int, int, int>> es;
        for (const auto& [e, m] : q.edges)
            es.emplace_back(perm[static_cast<std::size_t>(e.first)], perm[static_cast<std::size_t>(e.second)], m);
        std::sort(es.begin(), es.end());
        std::string key;
        for (int x : w) key += std::to_string(x) + ",";
        key += "|";
        for (auto [a, b, m] : es) key += std::to_string(a) + ">" + std::to_string(b) + "x" + std::to_string(m) + ";";
        if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string quiver_to_json(const WeightedQuiver& q) {
    nlohmann::json j;
    j["weights"] = q.weights;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [e, m] : q.edges) edges.push_back({e.first, e.second, m});
    j["edges"] = edges;
    return j.dump() + "\n";
}

WeightedQuiver quiver_from_json(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        auto weights = j.at("weights").get<std::vector<int>>();
        std::vector<std::tuple<int, int, int>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3) throw ParseError("quiver edge must be [from,to,mult]");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>(), e[2].get<int>());
        }
        return make_quiver(std::move(weights), edges);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("quiver JSON: ") + e.what());
    }
}

std::string quiver_to_dot(const WeightedQuiver& q, const std::string& name) {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
    for (int v = 0; v < q.size(); ++v)
        os << "  v" << v << " [label=\"" << v + 1 << "\", shape="
           << (q.weights[static_cast<std::size_t>(v)] == 2 ? "doublecircle" : "circle") << "];\n";
    for (const auto& [e, m] : q.edges)
        for (int k = 0; k < m; ++k) os << "  v" << e.first << " -> v" << e.second << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace latmut
