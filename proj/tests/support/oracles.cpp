#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace latmut::test {

std::vector<std::vector<bool>> brute_order(const Poset& p) {
    const std::size_t n = p.size();
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (Elem x = 0; x < n; ++x) le[x][x] = true;
    for (auto [x, y] : p.covers()) le[x][y] = true;
    for (bool changed = true; changed;) {
        changed = false;
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y)
                for (Elem z = 0; z < n; ++z)
                    if (le[x][y] && le[y][z] && !le[x][z]) {
                        le[x][z] = true;
                        changed = true;
                    }
    }
    return le;
}

namespace {

std::optional<Elem> extremal_bound(const std::vector<std::vector<bool>>& le, Elem x, Elem y, bool upper) {
    const std::size_t n = le.size();
    std::vector<Elem> bounds;
    for (Elem z = 0; z < n; ++z)
        if (upper ? (le[x][z] && le[y][z]) : (le[z][x] && le[z][y])) bounds.push_back(z);
    for (Elem b : bounds) {
        bool best = true;
        for (Elem c : bounds) best = best && (upper ? le[b][c] : le[c][b]);
        if (best) return b;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Elem> brute_join(const Poset& p, Elem x, Elem y) { return extremal_bound(brute_order(p), x, y, true); }

std::optional<Elem> brute_meet(const Poset& p, Elem x, Elem y) { return extremal_bound(brute_order(p), x, y, false); }

bool brute_is_lattice(const Poset& p) {
    if (p.size() == 0) return false;
    auto le = brute_order(p);
    for (Elem x = 0; x < p.size(); ++x)
        for (Elem y = 0; y < p.size(); ++y)
            if (!extremal_bound(le, x, y, true) || !extremal_bound(le, x, y, false)) return false;
    return true;
}

std::vector<std::vector<int>> brute_distance(const Poset& p) {
    const std::size_t n = p.size();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> best(n, std::vector<int>(n, inf));
    auto covers = p.covers();
    for (Elem s = 0; s < n; ++s) {
        std::vector<int> cur(n, inf);
        cur[s] = 0;
        best[s][s] = 0;
        for (std::size_t step = 0; step < 2 * n; ++step) {
            std::vector<int> next(n, inf);
            for (auto [lo, hi] : covers) {
                if (cur[lo] < inf) next[hi] = std::min(next[hi], cur[lo]);
                if (cur[hi] < inf) next[lo] = std::min(next[lo], cur[hi] + 1);
            }
            for (Elem t = 0; t < n; ++t) best[s][t] = std::min(best[s][t], next[t]);
            cur = next;
        }
    }
    return best;
}

bool brute_semidistributive(const Poset& p) {
    auto le = brute_order(p);
    const std::size_t n = p.size();
    auto join = [&](Elem x, Elem y) { return *extremal_bound(le, x, y, true); };
    auto meet = [&](Elem x, Elem y) { return *extremal_bound(le, x, y, false); };
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z) {
                if (join(x, y) == join(x, z) && join(x, meet(y, z)) != join(x, y)) return false;
                if (meet(x, y) == meet(x, z) && meet(x, join(y, z)) != meet(x, y)) return false;
            }
    return true;
}

bool brute_isomorphic(const Poset& p, const Poset& q) {
    if (p.size() != q.size() || p.cover_count() != q.cover_count()) return false;
    const std::size_t n = p.size();
    auto lp = brute_order(p), lq = brute_order(q);
    // Elements below and above, which any isomorphism preserves.
    auto profile = [n](const std::vector<std::vector<bool>>& le, Elem x) {
        std::size_t below = 0, above = 0;
        for (Elem y = 0; y < n; ++y) {
            below += le[y][x];
            above += le[x][y];
        }
        return std::pair{below, above};
    };
    std::vector<Elem> image(n);
    std::vector<bool> used(n, false);
    auto extend = [&](auto&& self, Elem x) -> bool {
        if (x == n) return true;
        for (Elem c = 0; c < n; ++c) {
            if (used[c] || profile(lp, x) != profile(lq, c)) continue;
            bool ok = true;
            for (Elem y = 0; y < x && ok; ++y)
                ok = lp[x][y] == lq[c][image[y]] && lp[y][x] == lq[image[y]][c];
            if (!ok) continue;
            used[c] = true;
            image[x] = c;
            if (self(self, x + 1)) return true;
            used[c] = false;
        }
        return false;
    };
    return extend(extend, 0);
}

std::size_t brute_lattice_count(std::size_t n) {
    if (n <= 2) return 1;
    const std::size_t inner = n - 2;
    std::vector<std::pair<Elem, Elem>> slots;
    for (Elem i = 0; i < inner; ++i)
        for (Elem j = i + 1; j < inner; ++j) slots.emplace_back(i, j);
    std::set<std::vector<bool>> keys;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        Relation rel;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if ((mask >> s) & 1) rel.emplace_back(slots[s].first + 1, slots[s].second + 1);
        for (Elem i = 1; i <= inner; ++i) {
            rel.emplace_back(0, i);
            rel.emplace_back(i, n - 1);
        }
        if (inner == 0) rel.emplace_back(0, n - 1);
        Poset p = poset_from_covers(n, rel);
        if (!brute_is_lattice(p)) continue;
        auto le = brute_order(p);
        std::vector<Elem> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<bool> key;
        do {
            std::vector<bool> k(n * n);
            for (Elem x = 0; x < n; ++x)
                for (Elem y = 0; y < n; ++y) k[perm[x] * n + perm[y]] = le[x][y];
            if (key.empty() || k < key) key = k;
        } while (std::next_permutation(perm.begin(), perm.end()));
        keys.insert(key);
    }
    return keys.size();
}

namespace {

bool chords_cross(std::pair<int, int> a, std::pair<int, int> b) {
    auto [p, q] = a;
    auto [r, s] = b;
    if (p == r || p == s || q == r || q == s) return false;
    return (p < r && r < q) != (p < s && s < q);
}

std::vector<std::pair<int, int>> chords(int m) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j)
            if (!(i == 0 && j == m - 1)) out.emplace_back(i, j);
    return out;
}

void extend(const std::vector<std::pair<int, int>>& all, std::size_t from, std::vector<std::pair<int, int>>& chosen,
            std::size_t target, const std::function<void()>& visit) {
    if (chosen.size() == target) {
        visit();
        return;
    }
    for (std::size_t i = from; i < all.size(); ++i) {
        bool ok = true;
        for (auto c : chosen) ok = ok && !chords_cross(c, all[i]);
        if (!ok) continue;
        chosen.push_back(all[i]);
        extend(all, i + 1, chosen, target, visit);
        chosen.pop_back();
    }
}

}  // namespace

std::size_t brute_triangulation_count(int m) {
    if (m < 3) return 0;
    auto all = chords(m);
    std::vector<std::pair<int, int>> chosen;
    std::size_t count = 0;
    extend(all, 0, chosen, static_cast<std::size_t>(m - 3), [&] { ++count; });
    return count;
}

std::size_t brute_symmetric_triangulation_count(int k) {
    const int m = 2 * k;
    auto all = chords(m);
    std::vector<std::pair<int, int>> chosen;
    std::size_t count = 0;
    auto rotate = [m, k](std::pair<int, int> c) {
        int a = (c.first + k) % m, b = (c.second + k) % m;
        return std::make_pair(std::min(a, b), std::max(a, b));
    };
    extend(all, 0, chosen, static_cast<std::size_t>(m - 3), [&] {
        std::set<std::pair<int, int>> s(chosen.begin(), chosen.end());
        for (auto c : chosen)
            if (!s.count(rotate(c))) return;
        ++count;
    });
    return count;
}

std::uint64_t binomial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t catalan(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

}  // namespace latmut::test
