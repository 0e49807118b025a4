#include "latmut/lattice.hpp"

#include <algorithm>
#include <limits>

namespace latmut {

namespace {

// Least element of the up-closed set u, if any. Rows are indexed by linear-extension position.
struct BoundFinder {
    std::vector<Elem> order;
    std::vector<Elem> pos;
    std::vector<Bitset> rows;
    std::vector<std::size_t> counts;

    BoundFinder(const Poset& p, bool upward) {
        const std::size_t n = p.size();
        order = linear_extension(p);
        if (!upward) std::reverse(order.begin(), order.end());
        pos.resize(n);
        for (Elem i = 0; i < n; ++i) pos[order[i]] = i;
        rows.assign(n, Bitset(n));
        counts.resize(n);
        for (Elem x = 0; x < n; ++x) {
            const Bitset& s = upward ? p.up_set(x) : p.down_set(x);
            for (auto y = s.find_first(); y != Bitset::npos; y = s.find_next(y)) rows[x].set(pos[y]);
            counts[x] = rows[x].count();
        }
    }

    // Returns the bound or the number of minimal bounds found (0 or >= 2).
    std::pair<std::optional<Elem>, std::size_t> bound(Elem x, Elem y, Bitset& scratch) const {
        scratch = rows[x];
        scratch &= rows[y];
        auto first = scratch.find_first();
        if (first == Bitset::npos) return {std::nullopt, 0};
        Elem z = order[first];
        if (counts[z] == scratch.count()) return {z, 1};
        std::size_t minimal = 0;
        for (auto i = first; i != Bitset::npos; i = scratch.find_next(i)) {
            bool is_min = true;
            for (auto j = first; j < i; j = scratch.find_next(j)) {
                if (rows[order[j]].test(i)) {
                    is_min = false;
                    break;
                }
            }
            if (is_min) ++minimal;
        }
        return {std::nullopt, minimal};
    }
};

}  // namespace

std::optional<Lattice> try_as_lattice(const Poset& p, std::optional<NotALattice>* why) {
    const std::size_t n = p.size();
    auto fail = [&](Elem x, Elem y, std::string reason) -> std::optional<Lattice> {
        if (why) why->emplace(x, y, std::move(reason));
        return std::nullopt;
    };
    if (n == 0) return fail(0, 0, "empty poset");
    if (n > std::numeric_limits<std::uint16_t>::max()) return fail(0, 0, "poset too large");
    auto lo = least_element(p);
    auto hi = greatest_element(p);
    if (!lo || !hi) {
        auto mins = minimal_elements(p);
        auto maxs = maximal_elements(p);
        if (!lo) return fail(mins[0], mins[1], "no unique minimum");
        return fail(maxs[0], maxs[1], "no unique maximum");
    }

    Lattice l;
    l.poset_ = p;
    l.bottom_ = *lo;
    l.top_ = *hi;
    l.join_.assign(n * n, 0);
    l.meet_.assign(n * n, 0);
    BoundFinder up(p, true);
    BoundFinder down(p, false);
    Bitset scratch(n);
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = x; y < n; ++y) {
            Elem j, m;
            if (p.leq(x, y)) {
                j = y;
                m = x;
            } else if (p.leq(y, x)) {
                j = x;
                m = y;
            } else {
                auto [jb, jc] = up.bound(x, y, scratch);
                if (!jb)
                    return fail(x, y, jc == 0 ? "no upper bound"
                                              : std::to_string(jc) + " minimal upper bounds");
                auto [mb, mc] = down.bound(x, y, scratch);
                if (!mb)
                    return fail(x, y, mc == 0 ? "no lower bound"
                                              : std::to_string(mc) + " maximal lower bounds");
                j = *jb;
                m = *mb;
            }
            l.join_[x * n + y] = l.join_[y * n + x] = static_cast<std::uint16_t>(j);
            l.meet_[x * n + y] = l.meet_[y * n + x] = static_cast<std::uint16_t>(m);
        }
    }
    return l;
}

Lattice as_lattice(const Poset& p) {
    std::optional<NotALattice> why;
    auto l = try_as_lattice(p, &why);
    if (!l) throw *why;
    return std::move(*l);
}

bool is_lattice(const Poset& p) { return try_as_lattice(p).has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> is_polygon(const Lattice& l) {
    const Poset& p = l.poset();
    const std::size_t n = p.size();
    if (n < 4) return std::nullopt;
    for (auto d : hasse_degrees(p))
        if (d != 2) return std::nullopt;
    if (!is_connected(p)) return std::nullopt;
    auto atoms = l.atoms();
    if (atoms.size() != 2) return std::nullopt;
    std::vector<std::size_t> lengths;
    for (Elem a : atoms) {
        std::size_t len = 1;
        Elem x = a;
        while (x != l.top()) {
            x = p.upper_covers(x).front();
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return std::make_pair(lengths[0], lengths[1]);
}

bool is_semidistributive(const Lattice& l) {
    const std::size_t n = l.size();
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = y + 1; z < n; ++z) {
                Elem w = l.join(x, y);
                if (l.join(x, z) == w && l.join(x, l.meet(y, z)) != w) return false;
                Elem v = l.meet(x, y);
                if (l.meet(x, z) == v && l.meet(x, l.join(y, z)) != v) return false;
            }
    return true;
}

std::size_t t_value(const Lattice& l, Elem a, Elem b) {
    return l.poset().down_set(l.join(a, b)).count();
}

bool is_lattice_homomorphism(const Lattice& l, const Lattice& m, const std::vector<Elem>& f) {
    if (f.size() != l.size()) return false;
    for (Elem v : f)
        if (v >= m.size()) return false;
    for (Elem x = 0; x < l.size(); ++x)
        for (Elem y = x + 1; y < l.size(); ++y) {
            if (f[l.join(x, y)] != m.join(f[x], f[y])) return false;
            if (f[l.meet(x, y)] != m.meet(f[x], f[y])) return false;
        }
    return true;
}

bool is_surjective(const std::vector<Elem>& f, std::size_t target_size) {
    std::vector<char> hit(target_size, 0);
    for (Elem v : f)
        if (v < target_size) hit[v] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

Poset quotient_poset(const Poset& p, const std::vector<Elem>& cls, std::size_t class_count) {
    Relation rel;
    for (auto [x, y] : p.covers())
        if (cls[x] != cls[y]) rel.emplace_back(cls[x], cls[y]);
    std::sort(rel.begin(), rel.end());
    rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
    return poset_from_covers(class_count, rel);
}

}  // namespace latmut
