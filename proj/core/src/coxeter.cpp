#include "latmut/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

#include "latmut/mutation.hpp"

namespace latmut {

namespace {

int apply(const std::vector<int>& p, int i) {
    return i > 0 ? p[static_cast<std::size_t>(i - 1)] : -p[static_cast<std::size_t>(-i - 1)];
}

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = apply(p, q[i]);
    return r;
}

std::vector<int> invert(const std::vector<int>& p) {
    std::vector<int> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        int v = p[i];
        int s = v > 0 ? 1 : -1;
        r[static_cast<std::size_t>(std::abs(v) - 1)] = s * static_cast<int>(i + 1);
    }
    return r;
}

int inversions(const std::vector<int>& w) {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++c;
    return c;
}

int length_b_images(const std::vector<int>& w) {
    int c = inversions(w);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0) ++c;
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] + w[j] < 0) ++c;
    }
    return c;
}

bool valid_images(const std::vector<int>& w, bool allow_signs) {
    std::vector<char> seen(w.size(), 0);
    for (int v : w) {
        int a = std::abs(v);
        if (a < 1 || a > static_cast<int>(w.size()) || seen[static_cast<std::size_t>(a - 1)]) return false;
        if (v < 0 && !allow_signs) return false;
        seen[static_cast<std::size_t>(a - 1)] = 1;
    }
    return true;
}

std::string images_to_string(const std::vector<int>& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s + "]";
}

std::vector<int> parse_images(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("permutation must look like [3,1,2]: " + text);
    std::vector<int> out;
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw ParseError("bad permutation entry: " + tok);
        } catch (const std::logic_error&) {
            throw ParseError("bad permutation entry: " + tok);
        }
    }
    return out;
}

std::vector<int> generator_images(CoxeterType t, int n, int i) {
    if (i < 1 || i > n) throw PreconditionFailed("generator index out of range");
    if (t == CoxeterType::A) {
        std::vector<int> w(static_cast<std::size_t>(n + 1));
        for (int k = 0; k <= n; ++k) w[static_cast<std::size_t>(k)] = k + 1;
        std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
        return w;
    }
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = k + 1;
    if (i == 1)
        w[0] = -1;
    else
        std::swap(w[static_cast<std::size_t>(i - 2)], w[static_cast<std::size_t>(i - 1)]);
    return w;
}

}  // namespace

char type_letter(CoxeterType t) { return t == CoxeterType::A ? 'A' : 'B'; }

bool is_valid(const PermA& p) { return valid_images(p.images, false); }
bool is_valid(const PermB& p) { return valid_images(p.images, true); }

PermA generator_a(int n, int i) { return {generator_images(CoxeterType::A, n, i)}; }
PermB generator_b(int n, int i) { return {generator_images(CoxeterType::B, n, i)}; }

PermA identity_a(int n) {
    PermA p;
    for (int k = 1; k <= n + 1; ++k) p.images.push_back(k);
    return p;
}

PermB identity_b(int n) {
    PermB p;
    for (int k = 1; k <= n; ++k) p.images.push_back(k);
    return p;
}

PermA mult(const PermA& p, const PermA& q) { return {compose(p.images, q.images)}; }
PermB mult(const PermB& p, const PermB& q) { return {compose(p.images, q.images)}; }
PermA inverse(const PermA& p) { return {invert(p.images)}; }
PermB inverse(const PermB& p) { return {invert(p.images)}; }
int length(const PermA& p) { return inversions(p.images); }
int length(const PermB& p) { return length_b_images(p.images); }

bool weak_leq(const PermA& p, const PermA& q) {
    return length(q) == length(p) + length(mult(inverse(p), q));
}

bool weak_leq(const PermB& p, const PermB& q) {
    return length(q) == length(p) + length(mult(inverse(p), q));
}

std::string to_string(const PermA& p) { return images_to_string(p.images); }
std::string to_string(const PermB& p) { return images_to_string(p.images); }

PermA parse_perm_a(const std::string& s) {
    PermA p{parse_images(s)};
    if (!is_valid(p)) throw ParseError("not a permutation: " + s);
    return p;
}

PermB parse_perm_b(const std::string& s) {
    PermB p{parse_images(s)};
    if (!is_valid(p)) throw ParseError("not a signed permutation: " + s);
    return p;
}

std::optional<Elem> WeakOrder::index_of(const std::vector<int>& images) const {
    auto it = index_.find(images);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Elem WeakOrder::mult(Elem x, Elem y) const {
    return index_.at(compose(elements_[x], elements_[y]));
}

std::string WeakOrder::label(Elem x) const { return images_to_string(elements_[x]); }

WeakOrder build_weak_order(CoxeterType type, int n) {
    if (n < 1) throw PreconditionFailed("rank must be at least 1");
    if ((type == CoxeterType::A && n > 6) || (type == CoxeterType::B && n > 4))
        throw RankCapExceeded(std::string("weak order rank cap exceeded for type ") +
                              type_letter(type) + std::to_string(n));
    WeakOrder w;
    w.type_ = type;
    w.rank_ = n;
    std::vector<std::vector<int>> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(generator_images(type, n, i));
    std::vector<int> id = type == CoxeterType::A ? identity_a(n).images : identity_b(n).images;

    w.elements_.push_back(id);
    w.index_[id] = 0;
    w.lengths_.push_back(0);
    Relation covers;
    for (Elem x = 0; x < w.elements_.size(); ++x) {
        for (const auto& s : gens) {
            std::vector<int> y = compose(w.elements_[x], s);
            auto [it, fresh] = w.index_.emplace(y, w.elements_.size());
            if (fresh) {
                w.elements_.push_back(y);
                w.lengths_.push_back(w.lengths_[x] + 1);
            }
            if (w.lengths_[it->second] == w.lengths_[x] + 1) covers.emplace_back(x, it->second);
        }
    }
    for (Elem x = 0; x < w.elements_.size(); ++x) {
        int formula = type == CoxeterType::A ? inversions(w.elements_[x])
                                             : length_b_images(w.elements_[x]);
        ensure(formula == w.lengths_[x], "length statistic disagrees with BFS word length");
    }
    for (const auto& s : gens) w.generators_.push_back(w.index_.at(s));

    std::vector<std::string> labels;
    for (const auto& e : w.elements_) labels.push_back(images_to_string(e));
    w.lattice_ = as_lattice(poset_from_covers(w.elements_.size(), covers, std::move(labels)));
    w.w0_ = w.lattice_.top();
    int roots = type == CoxeterType::A ? n * (n + 1) / 2 : n * n;
    ensure(w.lengths_[w.w0_] == roots, "longest element must have length equal to #positive roots");
    return w;
}

WeakMutation weak_order_mutation(const WeakOrder& w, int generator) {
    const Lattice& l = w.lattice();
    Elem a = w.generator(generator);
    WeakMutation out{as_lattice(flip_on_atom(l.poset(), a)), {}, std::nullopt};
    if (auto ac = ac_correspondence_for_atom(l, a)) out.a_prime = ac->a_prime;
    ensure(out.a_prime == w.mult(a, w.w0()), "AC partner of a generator must be a*w0");
    out.iso.resize(w.size());
    for (Elem x = 0; x < w.size(); ++x) out.iso[x] = w.mult(a, x);
    const Poset& mp = out.mutated.poset();
    ensure(mp.cover_count() == l.poset().cover_count(), "mutated weak order cover count");
    for (auto [x, y] : mp.covers())
        ensure(l.poset().is_cover(out.iso[x], out.iso[y]), "x -> a*x must map covers to covers");
    return out;
}

Parabolic parabolic(const WeakOrder& w, const std::vector<int>& generators) {
    std::set<int> gens(generators.begin(), generators.end());
    for (int g : gens)
        if (g < 1 || g > w.rank()) throw PreconditionFailed("generator out of range");
    std::vector<Elem> reached{w.identity()};
    std::set<Elem> seen{w.identity()};
    for (std::size_t i = 0; i < reached.size(); ++i)
        for (int g : gens) {
            Elem y = w.mult(reached[i], w.generator(g));
            if (seen.insert(y).second) reached.push_back(y);
        }
    Elem longest = *std::max_element(reached.begin(), reached.end(),
                                     [&](Elem x, Elem y) { return w.length(x) < w.length(y); });
    Parabolic p{{gens.begin(), gens.end()}, longest, interval(w.lattice().poset(), w.identity(), longest)};
    std::vector<Elem> sorted(seen.begin(), seen.end());
    ensure(p.interval.to_parent == sorted, "parabolic subgroup must be the interval [id, w0']");
    const Lattice& l = w.lattice();
    for (Elem x : sorted)
        for (Elem y : sorted) ensure(seen.count(l.join(x, y)) == 1, "parabolic must be join-closed");
    return p;
}

ParabolicFactorization factor_through_parabolic(const WeakOrder& w, int a, const Lattice& m,
                                                const std::vector<Elem>& f) {
    const Lattice& l = w.lattice();
    if (!is_surjective(f, m.size()) || !is_lattice_homomorphism(l, m, f))
        throw PreconditionFailed("factor_through_parabolic needs a surjective lattice homomorphism");
    if (f[w.identity()] != f[w.generator(a)])
        throw PreconditionFailed("homomorphism must identify id and the generator");
    std::vector<int> rest;
    for (int i = 1; i <= w.rank(); ++i)
        if (i != a) rest.push_back(i);
    ParabolicFactorization out{parabolic(w, rest), {}, {}};
    const auto& elems = out.parabolic.interval.to_parent;
    out.f_prime.resize(w.size());
    for (Elem x = 0; x < w.size(); ++x) out.f_prime[x] = l.meet(x, out.parabolic.longest);
    for (Elem x = 0; x < w.size(); ++x)
        for (Elem y = x + 1; y < w.size(); ++y) {
            ensure(out.f_prime[l.join(x, y)] == l.join(out.f_prime[x], out.f_prime[y]),
                   "f' must preserve joins");
            ensure(out.f_prime[l.meet(x, y)] == l.meet(out.f_prime[x], out.f_prime[y]),
                   "f' must preserve meets");
        }
    for (Elem x = 0; x < w.size(); ++x) ensure(f[x] == f[out.f_prime[x]], "f must factor through f'");
    for (Elem e : elems) ensure(out.f_prime[e] == e, "f' must fix the parabolic");
    for (Elem e : elems) out.g.push_back(f[e]);
    return out;
}

}  // namespace latmut
