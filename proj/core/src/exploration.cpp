#include "latmut/exploration.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "latmut/canonical.hpp"
#include "latmut/flip.hpp"

namespace latmut {

std::optional<std::size_t> MutationGraph::find(const std::string& form) const {
    auto it = std::find(forms.begin(), forms.end(), form);
    if (it == forms.end()) return std::nullopt;
    return static_cast<std::size_t>(it - forms.begin());
}

MutationGraph mutation_graph(const Lattice& seed, std::size_t cap) {
    MutationGraph g;
    std::map<std::string, std::size_t> index;
    auto add = [&](Lattice l) {
        std::string form = canonical_form(l.poset());
        auto [it, fresh] = index.emplace(form, g.representatives.size());
        if (fresh) {
            if (g.representatives.size() >= cap)
                throw Overflow("mutation graph exceeds " + std::to_string(cap) + " classes");
            g.representatives.push_back(std::move(l));
            g.forms.push_back(form);
        }
        return std::make_pair(it->second, fresh);
    };
    add(seed);
    for (std::size_t i = 0; i < g.representatives.size(); ++i) {
        const Lattice l = g.representatives[i];
        if (!is_locally_mutable(l)) g.not_locally_mutable.push_back(i);
        if (l.size() < 2) continue;
        for (Elem a : l.atoms()) {
            auto m = try_as_lattice(flip_on_atom(l.poset(), a));
            if (!m) {
                g.non_lattice_flips.emplace_back(i, a);
                continue;
            }
            auto [to, fresh] = add(std::move(*m));
            g.edges.push_back({i, to, a});
        }
    }
    return g;
}

bool is_polygonal(const Lattice& l) {
    const Poset& p = l.poset();
    auto polygon = [&](Elem lo, Elem hi) {
        return is_polygon(as_lattice(interval(p, lo, hi).poset)).has_value();
    };
    for (Elem x = 0; x < l.size(); ++x) {
        const auto& up = p.upper_covers(x);
        for (std::size_t i = 0; i < up.size(); ++i)
            for (std::size_t j = i + 1; j < up.size(); ++j)
                if (!polygon(x, l.join(up[i], up[j]))) return false;
        const auto& down = p.lower_covers(x);
        for (std::size_t i = 0; i < down.size(); ++i)
            for (std::size_t j = i + 1; j < down.size(); ++j)
                if (!polygon(l.meet(down[i], down[j]), x)) return false;
    }
    return true;
}

std::optional<std::size_t> regular_degree(const Lattice& l) {
    auto deg = hasse_degrees(l.poset());
    if (deg.empty()) return std::nullopt;
    for (auto d : deg)
        if (d != deg.front()) return std::nullopt;
    return deg.front();
}

std::vector<Elem> mutated_atom_order(const Lattice& l, const std::vector<Elem>& atoms, std::size_t i,
                                     const Lattice& flipped) {
    const Elem ai = atoms.at(i);
    std::vector<Elem> out(atoms.size());
    auto new_atoms = flipped.atoms();
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        if (j == i) {
            out[j] = l.bottom();
            continue;
        }
        Elem top = l.join(ai, atoms[j]);
        std::vector<Elem> hits;
        for (Elem x : new_atoms)
            if (x != l.bottom() && l.leq(x, top)) hits.push_back(x);
        if (hits.size() != 1) throw PreconditionFailed("no unique atom correspondence after mutation");
        out[j] = hits.front();
    }
    auto a = out, b = new_atoms;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw PreconditionFailed("atom correspondence after mutation is not a bijection");
    return out;
}

ConjectureReport verify_ordovician_conjectures(const MutationGraph& g, std::optional<CoxeterType> type) {
    ConjectureReport r;
    r.all_lattices = true;
    r.all_pass = g.non_lattice_flips.empty();
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Lattice& l = g.representatives[i];
        ClassReport c;
        c.index = i;
        c.size = l.size();
        c.locally_mutable = std::find(g.not_locally_mutable.begin(), g.not_locally_mutable.end(), i) ==
                            g.not_locally_mutable.end();
        c.polygonal = is_polygonal(l);
        c.semidistributive = is_semidistributive(l);
        c.regular_degree = regular_degree(l);
        try {
            u_map(l);
            c.u_map_ok = true;
        } catch (const MutabilityViolation&) {
            c.u_map_ok = false;
        }
        if (type) {
            try {
                auto lq = quiver_from_lattice(l, *type);
                c.quiver_key = quiver_iso_key(lq.quiver);
                bool ok = true;
                for (const auto& e : g.edges) {
                    if (e.from != i) continue;
                    auto pos = std::find(lq.atoms.begin(), lq.atoms.end(), e.atom) - lq.atoms.begin();
                    Lattice flipped = as_lattice(flip_on_atom(l.poset(), e.atom));
                    auto order = mutated_atom_order(l, lq.atoms, static_cast<std::size_t>(pos), flipped);
                    auto fq = quiver_from_lattice(flipped, *type, order).quiver;
                    ok = ok && fq == mutate_quiver(lq.quiver, static_cast<int>(pos));
                }
                c.quiver_commutes = ok;
            } catch (const Error&) {
                c.quiver_commutes = false;
            }
        }
        bool pass = c.locally_mutable && c.polygonal && c.semidistributive && c.regular_degree && c.u_map_ok &&
                    c.quiver_commutes.value_or(true);
        r.all_pass = r.all_pass && pass;
        r.classes.push_back(std::move(c));
    }
    return r;
}

QuotientObstruction not_coxeter_quotient(const Lattice& l) {
    if (l.size() < 2 || l.atoms().size() < 3)
        throw PreconditionFailed("quotient obstruction needs at least 3 atoms");
    auto atoms = l.atoms();
    QuotientObstruction out;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t j = i + 1; j < atoms.size(); ++j)
            for (std::size_t k = j + 1; k < atoms.size(); ++k) {
                std::vector<std::size_t> t{t_value(l, atoms[i], atoms[j]), t_value(l, atoms[j], atoms[k]),
                                           t_value(l, atoms[k], atoms[i])};
                if (*std::min_element(t.begin(), t.end()) >= 5) {
                    out.obstructed = true;
                    out.atoms = {atoms[i], atoms[j], atoms[k]};
                    out.t_values = t;
                    return out;
                }
            }
    return out;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (y < x) std::swap(x, y);
        parent_[y] = x;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

UnionFind congruence_closure(const Lattice& l, UnionFind uf) {
    const std::size_t n = l.size();
    for (bool changed = true; changed;) {
        changed = false;
        for (Elem x = 0; x < n; ++x) {
            Elem r = uf.find(x);
            if (r == x) continue;
            for (Elem z = 0; z < n; ++z) {
                changed = uf.unite(l.join(x, z), l.join(r, z)) || changed;
                changed = uf.unite(l.meet(x, z), l.meet(r, z)) || changed;
            }
        }
    }
    return uf;
}

}  // namespace

std::vector<std::string> weak_order_quotient_forms(CoxeterType type, int n) {
    WeakOrder w = build_weak_order(type, n);
    const Lattice& l = w.lattice();
    const Poset& p = l.poset();
    const std::size_t size = l.size();
    std::vector<Elem> jis;
    for (Elem x = 0; x < size; ++x)
        if (p.lower_covers(x).size() == 1) jis.push_back(x);
    if (jis.size() > 64) throw Overflow("too many join-irreducibles for the congruence search");
    const std::size_t k = jis.size();

    std::vector<std::vector<std::size_t>> con(k);
    std::vector<std::uint64_t> forced(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        UnionFind uf(size);
        uf.unite(jis[i], p.lower_covers(jis[i]).front());
        uf = congruence_closure(l, uf);
        con[i].resize(size);
        for (Elem x = 0; x < size; ++x) con[i][x] = uf.find(x);
        for (std::size_t j = 0; j < k; ++j)
            if (con[i][jis[j]] == con[i][p.lower_covers(jis[j]).front()]) forced[i] |= std::uint64_t{1} << j;
    }

    std::set<std::uint64_t> seen{0};
    std::deque<std::uint64_t> queue{0};
    std::set<std::string> forms;
    const std::size_t cap = default_state_cap();
    while (!queue.empty()) {
        std::uint64_t s = queue.front();
        queue.pop_front();
        UnionFind uf(size);
        for (std::size_t i = 0; i < k; ++i)
            if ((s >> i) & 1)
                for (Elem x = 0; x < size; ++x) uf.unite(x, con[i][x]);
        std::vector<Elem> cls(size);
        std::map<std::size_t, Elem> ids;
        for (Elem x = 0; x < size; ++x) cls[x] = ids.emplace(uf.find(x), ids.size()).first->second;
        forms.insert(canonical_form(quotient_poset(p, cls, ids.size())));
        for (std::size_t i = 0; i < k; ++i) {
            if ((s >> i) & 1) continue;
            std::uint64_t next = s | forced[i];
            if (seen.insert(next).second) {
                if (seen.size() > cap) throw Overflow("congruence search exceeds the state cap");
                queue.push_back(next);
            }
        }
    }
    return {forms.begin(), forms.end()};
}

std::string mutation_graph_to_json(const MutationGraph& g, std::optional<CoxeterType> type) {
    nlohmann::json j;
    nlohmann::json classes = nlohmann::json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        nlohmann::json c;
        c["index"] = i;
        c["canonical"] = g.forms[i];
        c["size"] = g.representatives[i].size();
        if (type) {
            try {
                c["quiver"] = quiver_iso_key(quiver_from_lattice(g.representatives[i], *type).quiver);
            } catch (const Error&) {
                c["quiver"] = nullptr;
            }
        }
        classes.push_back(c);
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges) edges.push_back({e.from, e.to, e.atom});
    j["classes"] = classes;
    j["edges"] = edges;
    j["non_lattice_flips"] = g.non_lattice_flips.size();
    return j.dump(2) + "\n";
}

std::string mutation_graph_to_dot(const MutationGraph& g, std::optional<CoxeterType> type) {
    std::ostringstream os;
    os << "digraph \"mutation_graph\" {\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::string label = "#" + std::to_string(i) + " |L|=" + std::to_string(g.representatives[i].size());
        if (type) {
            try {
                auto q = quiver_from_lattice(g.representatives[i], *type).quiver;
                std::string arrows;
                for (const auto& [e, m] : q.edges) {
                    if (!arrows.empty()) arrows += " ";
                    arrows += std::to_string(e.first + 1) + ">" + std::to_string(e.second + 1);
                }
                label += "\\n" + arrows;
            } catch (const Error&) {
            }
        }
        os << "  c" << i << " [label=\"" << label << "\"];\n";
    }
    for (const auto& e : g.edges) os << "  c" << e.from << " -> c" << e.to << " [label=\"" << e.atom << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace latmut
