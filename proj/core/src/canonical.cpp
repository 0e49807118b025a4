#include "latmut/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace latmut {

namespace {

using Colors = std::vector<std::uint32_t>;

std::size_t distinct(const Colors& c) {
    Colors s = c;
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

// Ranks the given signatures; equal signatures share a color.
Colors rank(std::vector<std::pair<std::vector<std::uint32_t>, Elem>>& sigs) {
    std::sort(sigs.begin(), sigs.end());
    Colors out(sigs.size());
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < sigs.size(); ++i) {
        if (i > 0 && sigs[i].first != sigs[i - 1].first) ++c;
        out[sigs[i].second] = c;
    }
    return out;
}

class Canonizer {
public:
    explicit Canonizer(const Poset& p) : p_(p), n_(p.size()) {}

    CanonicalLabeling run() {
        std::vector<std::pair<std::vector<std::uint32_t>, Elem>> sigs(n_);
        for (Elem x = 0; x < n_; ++x) {
            sigs[x] = {{static_cast<std::uint32_t>(p_.up_set(x).count()),
                        static_cast<std::uint32_t>(p_.down_set(x).count())},
                       x};
        }
        std::vector<Elem> prefix;
        if (n_ > 0) search(refine(rank(sigs)), prefix);
        CanonicalLabeling out;
        out.order = best_order_;
        out.form = std::to_string(n_) + ":";
        for (std::size_t i = 0; i < best_code_.size(); ++i) {
            if (i) out.form += ',';
            out.form += std::to_string(best_code_[i] / n_) + "<" + std::to_string(best_code_[i] % n_);
        }
        return out;
    }

private:
    Colors refine(Colors colors) const {
        std::size_t k = distinct(colors);
        std::vector<std::pair<std::vector<std::uint32_t>, Elem>> sigs(n_);
        while (true) {
            for (Elem x = 0; x < n_; ++x) {
                auto& s = sigs[x].first;
                s.clear();
                s.push_back(colors[x]);
                std::size_t mark = s.size();
                for (Elem y : p_.upper_covers(x)) s.push_back(colors[y]);
                std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark), s.end());
                s.push_back(static_cast<std::uint32_t>(n_ + 1));
                mark = s.size();
                for (Elem y : p_.lower_covers(x)) s.push_back(colors[y]);
                std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark), s.end());
                sigs[x].second = x;
            }
            Colors next = rank(sigs);
            std::size_t k2 = distinct(next);
            colors = std::move(next);
            if (k2 == k) break;
            k = k2;
        }
        return colors;
    }

    void leaf(const Colors& pos) {
        std::vector<std::uint32_t> code;
        code.reserve(p_.cover_count());
        for (Elem x = 0; x < n_; ++x)
            for (Elem y : p_.upper_covers(x))
                code.push_back(static_cast<std::uint32_t>(pos[x] * n_ + pos[y]));
        std::sort(code.begin(), code.end());
        if (!have_best_ || code < best_code_) {
            have_best_ = true;
            best_code_ = std::move(code);
            best_order_.assign(n_, 0);
            for (Elem x = 0; x < n_; ++x) best_order_[pos[x]] = x;
        } else if (code == best_code_) {
            std::vector<Elem> g(n_);
            bool identity = true;
            for (Elem x = 0; x < n_; ++x) {
                g[x] = best_order_[pos[x]];
                identity = identity && g[x] == x;
            }
            if (!identity) autos_.push_back(std::move(g));
        }
    }

    std::vector<Elem> orbit_roots(const std::vector<Elem>& prefix) const {
        std::vector<Elem> parent(n_);
        std::iota(parent.begin(), parent.end(), Elem{0});
        auto find = [&](Elem x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& g : autos_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Elem v) { return g[v] == v; });
            if (!fixes) continue;
            for (Elem x = 0; x < n_; ++x) parent[find(x)] = find(g[x]);
        }
        for (Elem x = 0; x < n_; ++x) parent[x] = find(x);
        return parent;
    }

    void search(const Colors& colors, std::vector<Elem>& prefix) {
        if (distinct(colors) == n_) {
            leaf(colors);
            return;
        }
        std::vector<std::size_t> count(n_, 0);
        for (auto c : colors) ++count[c];
        std::uint32_t target = 0;
        while (count[target] < 2) ++target;
        std::vector<Elem> tried;
        for (Elem v = 0; v < n_; ++v) {
            if (colors[v] != target) continue;
            if (!tried.empty()) {
                auto roots = orbit_roots(prefix);
                bool seen = std::any_of(tried.begin(), tried.end(),
                                        [&](Elem t) { return roots[t] == roots[v]; });
                if (seen) continue;
            }
            tried.push_back(v);
            Colors next(n_);
            for (Elem x = 0; x < n_; ++x)
                next[x] = 2 * colors[x] + ((colors[x] == target && x != v) ? 1 : 0);
            prefix.push_back(v);
            search(refine(std::move(next)), prefix);
            prefix.pop_back();
        }
    }

    const Poset& p_;
    std::size_t n_;
    bool have_best_ = false;
    std::vector<std::uint32_t> best_code_;
    std::vector<Elem> best_order_;
    std::vector<std::vector<Elem>> autos_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Poset& p) { return Canonizer(p).run(); }

std::string canonical_form(const Poset& p) { return canonical_labeling(p).form; }

bool are_isomorphic(const Poset& p, const Poset& q) {
    if (p.size() != q.size() || p.cover_count() != q.cover_count()) return false;
    return canonical_form(p) == canonical_form(q);
}

std::optional<std::vector<Elem>> find_isomorphism(const Poset& p, const Poset& q) {
    if (p.size() != q.size() || p.cover_count() != q.cover_count()) return std::nullopt;
    auto cp = canonical_labeling(p);
    auto cq = canonical_labeling(q);
    if (cp.form != cq.form) return std::nullopt;
    std::vector<Elem> iso(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) iso[cp.order[i]] = cq.order[i];
    return iso;
}

}  // namespace latmut
