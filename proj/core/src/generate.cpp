#include "latmut/generate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "latmut/canonical.hpp"

namespace latmut {

namespace {

Poset bounded(std::size_t inner, const Relation& rel) {
    const std::size_t n = inner + 2;
    Relation r;
    for (auto [a, b] : rel) r.emplace_back(a + 1, b + 1);
    for (Elem x = 1; x <= inner; ++x) {
        r.emplace_back(0, x);
        r.emplace_back(x, n - 1);
    }
    if (inner == 0) r.emplace_back(0, 1);
    return poset_from_covers(n, r);
}

}  // namespace

std::vector<Lattice> all_lattices(std::size_t n) {
    if (n == 0) return {};
    if (n == 1) return {as_lattice(poset_from_covers(1, {}))};
    const std::size_t inner = n - 2;
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem i = 0; i < inner; ++i)
        for (Elem j = i + 1; j < inner; ++j) pairs.emplace_back(i, j);
    if (pairs.size() > 24) throw Overflow("exhaustive lattice enumeration is capped at 7 elements");
    std::map<std::string, Lattice> found;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        // Keep only transitively closed relations, so each order is visited once per labeling.
        std::vector<std::vector<char>> rel(inner, std::vector<char>(inner, 0));
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1) rel[pairs[k].first][pairs[k].second] = 1;
        bool closed = true;
        for (Elem i = 0; i < inner && closed; ++i)
            for (Elem j = i + 1; j < inner && closed; ++j)
                if (rel[i][j])
                    for (Elem k = j + 1; k < inner && closed; ++k)
                        if (rel[j][k] && !rel[i][k]) closed = false;
        if (!closed) continue;
        Relation r;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1) r.push_back(pairs[k]);
        Poset p = bounded(inner, r);
        auto l = try_as_lattice(p);
        if (!l) continue;
        found.emplace(canonical_form(p), std::move(*l));
    }
    std::vector<Lattice> out;
    for (auto& [form, l] : found) out.push_back(std::move(l));
    return out;
}

Poset random_poset(std::size_t n, double density, Rng& rng) {
    std::bernoulli_distribution keep(density);
    Relation r;
    for (Elem i = 0; i < n; ++i)
        for (Elem j = i + 1; j < n; ++j)
            if (keep(rng)) r.emplace_back(i, j);
    Poset p = poset_from_covers(n, r);
    return permute(p, random_permutation(n, rng));
}

Poset random_connected_poset(std::size_t n, double density, Rng& rng) {
    for (;;) {
        Poset p = random_poset(n, density, rng);
        if (is_connected(p)) return p;
    }
}

Lattice random_lattice(std::size_t n, Rng& rng) {
    if (n < 2) return as_lattice(poset_from_covers(n, {}));
    std::uniform_real_distribution<double> dens(0.15, 0.6);
    for (;;) {
        Poset inner = random_poset(n - 2, dens(rng), rng);
        Poset p = bounded(n - 2, inner.covers());
        if (auto l = try_as_lattice(p)) {
            auto perm = random_permutation(n, rng);
            return as_lattice(permute(l->poset(), perm));
        }
    }
}

FlipPair random_flip_pair(std::shared_ptr<const Poset> p, Rng& rng) {
    const std::size_t n = p->size();
    if (n < 2) throw PreconditionFailed("flip pairs need at least two elements");
    std::bernoulli_distribution pick(0.35);
    for (;;) {
        Bitset a(n);
        for (Elem x = 0; x < n; ++x)
            if (pick(rng)) a |= p->down_set(x);
        if (a.none() || a.all()) continue;
        return FlipPair(p, a);
    }
}

std::vector<Elem> random_permutation(std::size_t n, Rng& rng) {
    std::vector<Elem> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace latmut
