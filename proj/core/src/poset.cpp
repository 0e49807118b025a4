#include "latmut/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace latmut {

std::vector<Elem> members(const Bitset& s) {
    std::vector<Elem> out;
    out.reserve(s.count());
    for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i)) out.push_back(i);
    return out;
}

Bitset make_set(std::size_t n, const std::vector<Elem>& elems) {
    Bitset s(n);
    for (Elem e : elems) {
        if (e >= n) throw IndexOutOfRange("element " + std::to_string(e) + " out of range");
        s.set(e);
    }
    return s;
}

void Poset::check(Elem x) const {
    if (x >= size()) {
        throw IndexOutOfRange("element " + std::to_string(x) + " out of range for poset of size " +
                              std::to_string(size()));
    }
}

bool Poset::leq(Elem x, Elem y) const {
    check(x);
    check(y);
    return up_[x].test(y);
}

bool Poset::is_cover(Elem x, Elem y) const {
    check(x);
    const auto& u = up_covers_[x];
    return std::binary_search(u.begin(), u.end(), y);
}

const std::vector<Elem>& Poset::upper_covers(Elem x) const {
    check(x);
    return up_covers_[x];
}

const std::vector<Elem>& Poset::lower_covers(Elem x) const {
    check(x);
    return down_covers_[x];
}

const Bitset& Poset::up_set(Elem x) const {
    check(x);
    return up_[x];
}

const Bitset& Poset::down_set(Elem x) const {
    check(x);
    return down_[x];
}

Relation Poset::covers() const {
    Relation out;
    for (Elem x = 0; x < size(); ++x)
        for (Elem y : up_covers_[x]) out.emplace_back(x, y);
    return out;
}

std::size_t Poset::cover_count() const {
    std::size_t c = 0;
    for (const auto& u : up_covers_) c += u.size();
    return c;
}

std::string Poset::label(Elem x) const {
    check(x);
    return labels_.empty() ? std::to_string(x) : labels_[x];
}

bool operator==(const Poset& a, const Poset& b) {
    return a.up_covers_ == b.up_covers_ && a.labels_ == b.labels_;
}

Poset poset_from_covers(std::size_t n, const Relation& relation, std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n)
        throw InvalidPoset("label count " + std::to_string(labels.size()) + " differs from n=" +
                           std::to_string(n));
    std::vector<std::vector<Elem>> succ(n);
    for (auto [x, y] : relation) {
        if (x >= n || y >= n)
            throw InvalidPoset("pair (" + std::to_string(x) + "," + std::to_string(y) +
                               ") references an index >= " + std::to_string(n));
        if (x == y) throw InvalidPoset("self-loop at " + std::to_string(x));
        succ[x].push_back(y);
    }
    std::vector<std::size_t> indeg(n, 0);
    for (auto& s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (Elem y : s) ++indeg[y];
    }

    std::vector<Elem> order;
    order.reserve(n);
    std::priority_queue<Elem, std::vector<Elem>, std::greater<>> ready;
    for (Elem x = 0; x < n; ++x)
        if (indeg[x] == 0) ready.push(x);
    while (!ready.empty()) {
        Elem x = ready.top();
        ready.pop();
        order.push_back(x);
        for (Elem y : succ[x])
            if (--indeg[y] == 0) ready.push(y);
    }
    if (order.size() != n) throw InvalidPoset("cycle detected in cover relation");

    Poset p;
    p.up_.assign(n, Bitset(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Elem x = *it;
        p.up_[x].set(x);
        for (Elem y : succ[x]) p.up_[x] |= p.up_[y];
    }
    p.up_covers_.assign(n, {});
    p.down_covers_.assign(n, {});
    for (Elem x = 0; x < n; ++x) {
        for (Elem y : succ[x]) {
            bool redundant = false;
            for (Elem z : succ[x]) {
                if (z != y && p.up_[z].test(y)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) {
                p.up_covers_[x].push_back(y);
                p.down_covers_[y].push_back(x);
            }
        }
    }
    for (auto& d : p.down_covers_) std::sort(d.begin(), d.end());
    p.down_.assign(n, Bitset(n));
    for (Elem x = 0; x < n; ++x)
        for (auto y = p.up_[x].find_first(); y != Bitset::npos; y = p.up_[x].find_next(y))
            p.down_[y].set(x);
    p.labels_ = std::move(labels);
    return p;
}

Poset relabel(const Poset& p, std::vector<std::string> labels) {
    return poset_from_covers(p.size(), p.covers(), std::move(labels));
}

bool is_connected(const Poset& p) {
    const std::size_t n = p.size();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<Elem> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        Elem x = stack.back();
        stack.pop_back();
        for (const auto* nb : {&p.upper_covers(x), &p.lower_covers(x)}) {
            for (Elem y : *nb) {
                if (!seen[y]) {
                    seen[y] = 1;
                    ++count;
                    stack.push_back(y);
                }
            }
        }
    }
    return count == n;
}

std::vector<Elem> minimal_elements(const Poset& p) {
    std::vector<Elem> out;
    for (Elem x = 0; x < p.size(); ++x)
        if (p.lower_covers(x).empty()) out.push_back(x);
    return out;
}

std::vector<Elem> maximal_elements(const Poset& p) {
    std::vector<Elem> out;
    for (Elem x = 0; x < p.size(); ++x)
        if (p.upper_covers(x).empty()) out.push_back(x);
    return out;
}

std::optional<Elem> least_element(const Poset& p) {
    auto m = minimal_elements(p);
    if (m.size() != 1) return std::nullopt;
    return m.front();
}

std::optional<Elem> greatest_element(const Poset& p) {
    auto m = maximal_elements(p);
    if (m.size() != 1) return std::nullopt;
    return m.front();
}

std::vector<Elem> linear_extension(const Poset& p) {
    const std::size_t n = p.size();
    std::vector<std::size_t> indeg(n);
    std::priority_queue<Elem, std::vector<Elem>, std::greater<>> ready;
    for (Elem x = 0; x < n; ++x) {
        indeg[x] = p.lower_covers(x).size();
        if (indeg[x] == 0) ready.push(x);
    }
    std::vector<Elem> order;
    order.reserve(n);
    while (!ready.empty()) {
        Elem x = ready.top();
        ready.pop();
        order.push_back(x);
        for (Elem y : p.upper_covers(x))
            if (--indeg[y] == 0) ready.push(y);
    }
    return order;
}

std::vector<std::size_t> heights(const Poset& p) {
    std::vector<std::size_t> h(p.size(), 0);
    for (Elem x : linear_extension(p))
        for (Elem y : p.upper_covers(x)) h[y] = std::max(h[y], h[x] + 1);
    return h;
}

Poset dual(const Poset& p) {
    Relation rel;
    for (auto [x, y] : p.covers()) rel.emplace_back(y, x);
    return poset_from_covers(p.size(), rel, p.labels());
}

Poset permute(const Poset& p, const std::vector<Elem>& perm) {
    const std::size_t n = p.size();
    if (perm.size() != n) throw PreconditionFailed("permutation size mismatch");
    Relation rel;
    for (auto [x, y] : p.covers()) rel.emplace_back(perm[x], perm[y]);
    std::vector<std::string> labels;
    if (p.has_labels()) {
        labels.resize(n);
        for (Elem x = 0; x < n; ++x) labels[perm[x]] = p.labels()[x];
    }
    return poset_from_covers(n, rel, std::move(labels));
}

SubPoset induced_subposet(const Poset& p, const std::vector<Elem>& elems) {
    std::vector<Elem> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::ptrdiff_t> local(p.size(), -1);
    for (Elem i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= p.size()) throw IndexOutOfRange("subposet element out of range");
        local[sorted[i]] = static_cast<std::ptrdiff_t>(i);
    }
    Relation rel;
    for (Elem i = 0; i < sorted.size(); ++i)
        for (Elem j = 0; j < sorted.size(); ++j)
            if (i != j && p.leq(sorted[i], sorted[j])) rel.emplace_back(i, j);
    std::vector<std::string> labels;
    if (p.has_labels())
        for (Elem e : sorted) labels.push_back(p.labels()[e]);
    return {poset_from_covers(sorted.size(), rel, std::move(labels)), sorted};
}

SubPoset interval(const Poset& p, Elem a, Elem b) {
    if (!p.leq(a, b))
        throw PreconditionFailed("interval requires a <= b, got " + std::to_string(a) + " and " +
                                 std::to_string(b));
    return induced_subposet(p, members(p.up_set(a) & p.down_set(b)));
}

std::vector<std::pair<Elem, Elem>> hasse_edges(const Poset& p) {
    std::vector<std::pair<Elem, Elem>> out;
    for (auto [x, y] : p.covers()) out.emplace_back(std::min(x, y), std::max(x, y));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> hasse_degrees(const Poset& p) {
    std::vector<std::size_t> d(p.size());
    for (Elem x = 0; x < p.size(); ++x) d[x] = p.upper_covers(x).size() + p.lower_covers(x).size();
    return d;
}

}  // namespace latmut
