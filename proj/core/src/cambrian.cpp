#include "latmut/cambrian.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace latmut {

namespace {

Diagonal norm(int a, int b) { return a < b ? Diagonal{a, b} : Diagonal{b, a}; }

void check_rank(int n) {
    if (n < 1) throw PreconditionFailed("rank must be at least 1");
}

}  // namespace

bool LabelledPolygon::is_label(int label) const {
    if (type == CoxeterType::A) return label >= 0 && label <= n + 2;
    return label != 0 && label >= -(n + 1) && label <= n + 1;
}

bool LabelledPolygon::is_upper(int label) const {
    if (!is_label(label) || is_endpoint(label))
        throw PreconditionFailed("label " + std::to_string(label) + " has no side");
    if (label > 0) return upper[static_cast<std::size_t>(label - 1)];
    return !upper[static_cast<std::size_t>(-label - 1)];
}

std::vector<int> LabelledPolygon::cycle() const {
    std::vector<int> inner;
    if (type == CoxeterType::A) {
        for (int i = 1; i <= n + 1; ++i) inner.push_back(i);
    } else {
        for (int i = -n; i <= n; ++i)
            if (i != 0) inner.push_back(i);
    }
    std::vector<int> out{left()};
    for (int x : inner)
        if (is_upper(x)) out.push_back(x);
    out.push_back(right());
    for (auto it = inner.rbegin(); it != inner.rend(); ++it)
        if (!is_upper(*it)) out.push_back(*it);
    return out;
}

LabelledPolygon polygon_from_orientation(const CoxeterOrientation& o) {
    check_rank(o.n);
    LabelledPolygon p{o.type, o.n, {}};
    const int n = o.n;
    if (o.type == CoxeterType::A) {
        p.upper.assign(static_cast<std::size_t>(n + 1), false);
        for (int i = 1; i < n; ++i) p.upper[static_cast<std::size_t>(i)] = !o.right[static_cast<std::size_t>(i - 1)];
        if (n == 1) {
            p.upper[1] = true;
        } else {
            p.upper[0] = !p.upper[1];
            p.upper[static_cast<std::size_t>(n)] = !p.upper[static_cast<std::size_t>(n - 1)];
        }
    } else {
        p.upper.assign(static_cast<std::size_t>(n), true);
        for (int i = 1; i < n; ++i) p.upper[static_cast<std::size_t>(i - 1)] = !o.right[static_cast<std::size_t>(i - 1)];
        if (n >= 2) p.upper[static_cast<std::size_t>(n - 1)] = !p.upper[static_cast<std::size_t>(n - 2)];
    }
    return p;
}

CoxeterOrientation orientation_from_polygon(const LabelledPolygon& p) {
    CoxeterOrientation o{p.type, p.n, {}};
    for (int i = 1; i < p.n; ++i) {
        int label = p.type == CoxeterType::A ? i + 1 : i;
        o.right.push_back(!p.upper[static_cast<std::size_t>(label - 1)]);
    }
    return o;
}

LabelledPolygon parse_polygon(const std::string& spec) {
    static const std::regex re(R"(^([AaBb])(\d+):([UuLl]*)$)");
    std::smatch m;
    if (!std::regex_match(spec, m, re)) throw ParseError("polygon spec must look like A3:UL, got \"" + spec + "\"");
    CoxeterType type = std::toupper(static_cast<unsigned char>(m[1].str()[0])) == 'A' ? CoxeterType::A : CoxeterType::B;
    int n = 0;
    try {
        n = std::stoi(m[2].str());
    } catch (const std::logic_error&) {
        throw ParseError("bad rank in \"" + spec + "\"");
    }
    if (n < 1) throw ParseError("rank must be at least 1");
    std::vector<bool> sides;
    for (char c : m[3].str()) sides.push_back(std::toupper(static_cast<unsigned char>(c)) == 'U');
    const int full = type == CoxeterType::A ? n + 1 : n;
    const int k = static_cast<int>(sides.size());
    if (k == full) return LabelledPolygon{type, n, sides};
    if (k != n - 1)
        throw ParseError("polygon spec \"" + spec + "\" needs " + std::to_string(n - 1) + " or " +
                         std::to_string(full) + " side letters");
    CoxeterOrientation o{type, n, {}};
    for (bool up : sides) o.right.push_back(!up);
    return polygon_from_orientation(o);
}

std::string polygon_to_string(const LabelledPolygon& p) {
    std::string s(1, type_letter(p.type));
    s += std::to_string(p.n) + ":";
    for (bool up : p.upper) s += up ? 'U' : 'L';
    return s;
}

std::string orientation_spec(const CoxeterOrientation& o) {
    std::string s(1, type_letter(o.type));
    s += std::to_string(o.n) + ":";
    for (bool r : o.right) s += r ? 'L' : 'U';
    return s;
}

Triangulation make_triangulation(std::vector<Diagonal> diagonals) {
    for (auto& d : diagonals) d = norm(d.first, d.second);
    std::sort(diagonals.begin(), diagonals.end());
    diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());
    return Triangulation{std::move(diagonals)};
}

std::string to_string(const Triangulation& t) {
    std::string s;
    for (const auto& [a, b] : t.diagonals) {
        if (!s.empty()) s += ',';
        s += std::to_string(a) + "-" + std::to_string(b);
    }
    return s;
}

Triangulation parse_triangulation(const std::string& text) {
    static const std::regex re(R"(^\s*(-?\d+)-(-?\d+)\s*$)");
    std::vector<Diagonal> ds;
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return {};
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::smatch m;
        if (!std::regex_match(tok, m, re)) throw ParseError("bad diagonal \"" + tok + "\"");
        ds.emplace_back(std::stoi(m[1].str()), std::stoi(m[2].str()));
    }
    return make_triangulation(std::move(ds));
}

namespace {

std::map<int, int> positions(const LabelledPolygon& p) {
    std::map<int, int> pos;
    auto c = p.cycle();
    for (std::size_t i = 0; i < c.size(); ++i) pos[c[i]] = static_cast<int>(i);
    return pos;
}

}  // namespace

bool is_boundary(const LabelledPolygon& p, Diagonal d) {
    auto pos = positions(p);
    const int n = static_cast<int>(pos.size());
    int x = pos.at(d.first), y = pos.at(d.second);
    int gap = std::abs(x - y);
    return gap == 1 || gap == n - 1;
}

bool crosses(const LabelledPolygon& p, Diagonal d, Diagonal e) {
    auto pos = positions(p);
    int a = pos.at(d.first), b = pos.at(d.second);
    int c = pos.at(e.first), f = pos.at(e.second);
    if (a == c || a == f || b == c || b == f) return false;
    if (a > b) std::swap(a, b);
    bool c_in = a < c && c < b;
    bool f_in = a < f && f < b;
    return c_in != f_in;
}

bool is_point_symmetric(const Triangulation& t) {
    std::set<Diagonal> s(t.diagonals.begin(), t.diagonals.end());
    for (const auto& [a, b] : t.diagonals)
        if (!s.count(norm(-a, -b))) return false;
    return true;
}

namespace {

class Zigzag {
public:
    explicit Zigzag(const LabelledPolygon& p) : p_(p) {
        auto c = p.cycle();
        const std::size_t n = c.size();
        for (std::size_t i = 0; i < n; ++i) boundary_.insert(norm(c[i], c[(i + 1) % n]));
        c_.insert(p.left());
        c_.insert(p.right());
        for (int x : c)
            if (!p.is_endpoint(x) && !p.is_upper(x)) c_.insert(x);
        draw();
    }

    void toggle(int x) {
        if (!c_.erase(x)) c_.insert(x);
        draw();
    }

    Triangulation result() const {
        Triangulation t = make_triangulation({found_.begin(), found_.end()});
        for (std::size_t i = 0; i < t.diagonals.size(); ++i)
            for (std::size_t j = i + 1; j < t.diagonals.size(); ++j)
                ensure(!crosses(p_, t.diagonals[i], t.diagonals[j]), "zigzag diagonals must not cross");
        return t;
    }

private:
    void draw() {
        for (auto it = c_.begin(); std::next(it) != c_.end(); ++it) {
            Diagonal d = norm(*it, *std::next(it));
            if (!boundary_.count(d)) found_.insert(d);
        }
    }

    const LabelledPolygon& p_;
    std::set<Diagonal> boundary_;
    std::set<int> c_;
    std::set<Diagonal> found_;
};

}  // namespace

Triangulation eta(const LabelledPolygon& p, const PermA& sigma) {
    if (p.type != CoxeterType::A) throw PreconditionFailed("eta needs a type-A polygon");
    if (!is_valid(sigma) || static_cast<int>(sigma.images.size()) != p.n + 1)
        throw PreconditionFailed("permutation size does not match the polygon");
    Zigzag z(p);
    for (int v : sigma.images) z.toggle(v);
    Triangulation t = z.result();
    ensure(static_cast<int>(t.diagonals.size()) == p.n, "eta must give n diagonals");
    return t;
}

Triangulation eta_b(const LabelledPolygon& p, const PermB& sigma) {
    if (p.type != CoxeterType::B) throw PreconditionFailed("eta_b needs a type-B polygon");
    if (!is_valid(sigma) || static_cast<int>(sigma.images.size()) != p.n)
        throw PreconditionFailed("signed permutation size does not match the polygon");
    Zigzag z(p);
    for (int i = p.n; i >= 1; --i) z.toggle(-sigma.images[static_cast<std::size_t>(i - 1)]);
    for (int i = 1; i <= p.n; ++i) z.toggle(sigma.images[static_cast<std::size_t>(i - 1)]);
    Triangulation t = z.result();
    ensure(static_cast<int>(t.diagonals.size()) == 2 * p.n - 1, "eta_b must give 2n-1 diagonals");
    ensure(is_point_symmetric(t), "eta_b must be point-symmetric");
    return t;
}

Triangulation eta_images(const LabelledPolygon& p, const std::vector<int>& images) {
    return p.type == CoxeterType::A ? eta(p, PermA{images}) : eta_b(p, PermB{images});
}

std::vector<Triangulation> all_triangulations(const LabelledPolygon& p) {
    auto c = p.cycle();
    const int n = static_cast<int>(c.size());
    std::map<std::pair<int, int>, std::vector<std::vector<Diagonal>>> memo;
    auto rec = [&](auto&& self, int i, int j) -> const std::vector<std::vector<Diagonal>>& {
        auto key = std::make_pair(i, j);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<std::vector<Diagonal>> out;
        if (j - i < 2) {
            out.push_back({});
        } else {
            for (int k = i + 1; k < j; ++k) {
                auto left = self(self, i, k);
                auto right = self(self, k, j);
                for (const auto& l : left)
                    for (const auto& r : right) {
                        std::vector<Diagonal> d = l;
                        d.insert(d.end(), r.begin(), r.end());
                        if (k - i > 1) d.push_back(norm(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(k)]));
                        if (j - k > 1) d.push_back(norm(c[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(j)]));
                        out.push_back(std::move(d));
                    }
            }
        }
        return memo[key] = std::move(out);
    };
    std::vector<Triangulation> out;
    for (const auto& d : rec(rec, 0, n - 1)) {
        Triangulation t = make_triangulation(d);
        if (p.type == CoxeterType::B && !is_point_symmetric(t)) continue;
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<int> positions_of(const std::vector<int>& images) {
    std::vector<int> pos(images.size() + 1);
    for (std::size_t k = 0; k < images.size(); ++k) pos[static_cast<std::size_t>(images[k])] = static_cast<int>(k);
    return pos;
}

bool move_allowed(const LabelledPolygon& p, const std::vector<int>& pos, int i, int k, PatternMoves moves) {
    int lo = std::min(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(k)]);
    int hi = std::max(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(k)]);
    if (moves == PatternMoves::Adjacent && hi - lo != 1) return false;
    for (int j = i + 1; j < k; ++j) {
        int pj = pos[static_cast<std::size_t>(j)];
        if (p.is_upper(j) && pj < lo) return true;
        if (!p.is_upper(j) && pj > hi) return true;
    }
    return false;
}

}  // namespace

std::vector<PermA> pattern_class(const LabelledPolygon& p, const PermA& sigma, PatternMoves moves) {
    if (p.type != CoxeterType::A) throw PreconditionFailed("pattern moves need a type-A polygon");
    if (!is_valid(sigma) || static_cast<int>(sigma.images.size()) != p.n + 1)
        throw PreconditionFailed("permutation size does not match the polygon");
    std::set<std::vector<int>> seen{sigma.images};
    std::deque<std::vector<int>> queue{sigma.images};
    const int m = p.n + 1;
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        auto pos = positions_of(cur);
        for (int i = 1; i <= m; ++i)
            for (int k = i + 2; k <= m; ++k) {
                if (!move_allowed(p, pos, i, k, moves)) continue;
                auto next = cur;
                std::swap(next[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])],
                          next[static_cast<std::size_t>(pos[static_cast<std::size_t>(k)])]);
                if (seen.insert(next).second) queue.push_back(next);
            }
    }
    std::vector<PermA> out;
    for (const auto& v : seen) out.push_back(PermA{v});
    return out;
}

bool pattern_kernel_equal(const LabelledPolygon& p, const PermA& sigma, const PermA& tau, PatternMoves moves) {
    auto cls = pattern_class(p, sigma, moves);
    bool same = std::binary_search(cls.begin(), cls.end(), tau);
    if (moves == PatternMoves::Adjacent)
        ensure(same == (eta(p, sigma) == eta(p, tau)), "pattern classes must be the fibers of eta");
    return same;
}

namespace {

void check_cap(CoxeterType type, int n, int cap_a, int cap_b) {
    check_rank(n);
    if ((type == CoxeterType::A && n > cap_a) || (type == CoxeterType::B && n > cap_b))
        throw RankCapExceeded(std::string("Cambrian rank cap exceeded for type ") + type_letter(type) +
                              std::to_string(n));
}

std::vector<std::string> triangulation_labels(const std::vector<Triangulation>& ts) {
    std::vector<std::string> out;
    for (const auto& t : ts) out.push_back(to_string(t));
    return out;
}

}  // namespace

Cambrian build_cambrian(const CoxeterOrientation& o, bool verify) {
    check_cap(o.type, o.n, 5, 3);
    if (static_cast<int>(o.right.size()) != o.n - 1) throw PreconditionFailed("orientation length mismatch");
    LabelledPolygon poly = polygon_from_orientation(o);
    WeakOrder w = build_weak_order(o.type, o.n);
    std::vector<Triangulation> image(w.size());
    std::map<Triangulation, Elem> index;
    for (Elem x = 0; x < w.size(); ++x) {
        image[x] = eta_images(poly, w.images(x));
        index.emplace(image[x], 0);
    }
    std::vector<Triangulation> elems;
    for (auto& [t, i] : index) {
        i = elems.size();
        elems.push_back(t);
    }
    std::vector<Elem> proj(w.size());
    for (Elem x = 0; x < w.size(); ++x) proj[x] = index.at(image[x]);
    Relation rel;
    for (auto [x, y] : w.lattice().poset().covers())
        if (proj[x] != proj[y]) rel.emplace_back(proj[x], proj[y]);
    std::sort(rel.begin(), rel.end());
    rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
    Lattice lat = as_lattice(poset_from_covers(elems.size(), rel, triangulation_labels(elems)));
    if (verify) {
        ensure(is_surjective(proj, lat.size()), "eta must be surjective");
        ensure(is_lattice_homomorphism(w.lattice(), lat, proj), "eta must be a lattice homomorphism");
    }
    return Cambrian{o, poly, std::move(w), std::move(lat), std::move(elems), std::move(proj)};
}

Diagonal cover_orientation(const LabelledPolygon& p, Diagonal d, Diagonal e) {
    d = norm(d.first, d.second);
    e = norm(e.first, e.second);
    if (!crosses(p, d, e)) throw PreconditionFailed("diagonals must cross");
    std::vector<int> q{d.first, d.second, e.first, e.second};
    std::sort(q.begin(), q.end());
    const int a = q[0], b = q[1], c = q[2];
    bool opposite = p.is_upper(b) != p.is_upper(c);
    std::set<Diagonal> expected = opposite ? std::set<Diagonal>{norm(b, c), norm(a, q[3])}
                                           : std::set<Diagonal>{norm(a, c), norm(b, q[3])};
    ensure(expected == std::set<Diagonal>{d, e}, "quadrilateral diagonals must follow the side rule");
    int key = p.is_upper(b) ? b : a;
    return (d.first == key || d.second == key) ? d : e;
}

namespace {

std::optional<Diagonal> flip_diagonal(const std::set<Diagonal>& edges, const std::vector<int>& labels, Diagonal d) {
    std::vector<int> apex;
    for (int k : labels) {
        if (k == d.first || k == d.second) continue;
        if (edges.count(norm(d.first, k)) && edges.count(norm(d.second, k))) apex.push_back(k);
    }
    if (apex.size() != 2) return std::nullopt;
    return norm(apex[0], apex[1]);
}

}  // namespace

Lattice direct_cambrian(const CoxeterOrientation& o) {
    check_cap(o.type, o.n, 7, 4);
    LabelledPolygon poly = polygon_from_orientation(o);
    auto elems = all_triangulations(poly);
    std::map<Triangulation, Elem> index;
    for (Elem i = 0; i < elems.size(); ++i) index[elems[i]] = i;
    auto cyc = poly.cycle();
    std::set<Diagonal> boundary;
    for (std::size_t i = 0; i < cyc.size(); ++i) boundary.insert(norm(cyc[i], cyc[(i + 1) % cyc.size()]));

    std::set<std::pair<Elem, Elem>> rel;
    for (Elem x = 0; x < elems.size(); ++x) {
        const auto& t = elems[x];
        std::set<Diagonal> edges = boundary;
        edges.insert(t.diagonals.begin(), t.diagonals.end());
        for (const auto& d : t.diagonals) {
            auto nd = flip_diagonal(edges, cyc, d);
            ensure(nd.has_value(), "every diagonal of a triangulation must be flippable");
            std::set<Diagonal> next(t.diagonals.begin(), t.diagonals.end());
            next.erase(d);
            next.insert(*nd);
            bool lower = cover_orientation(poly, d, *nd) == d;
            if (o.type == CoxeterType::B && d != norm(-d.second, -d.first)) {
                Diagonal md = norm(-d.first, -d.second);
                auto mnd = flip_diagonal(edges, cyc, md);
                ensure(mnd.has_value() && *mnd == norm(-nd->first, -nd->second),
                       "mirror diagonal must flip to the mirror image");
                next.erase(md);
                next.insert(*mnd);
                ensure((cover_orientation(poly, md, *mnd) == md) == lower,
                       "both quadrilaterals of a short edge must agree");
            }
            Triangulation nt = make_triangulation({next.begin(), next.end()});
            Elem y = index.at(nt);
            if (lower)
                rel.emplace(x, y);
            else
                rel.emplace(y, x);
        }
    }
    Relation r(rel.begin(), rel.end());
    Poset p = poset_from_covers(elems.size(), r, triangulation_labels(elems));
    ensure(p.cover_count() == r.size(), "every oriented flip must be a cover");
    return as_lattice(p);
}

Elem atom_for_vertex(const Cambrian& c, int vertex) {
    if (vertex < 1 || vertex > c.orientation.n) throw PreconditionFailed("quiver vertex out of range");
    Elem a = c.projection[c.weak.generator(vertex)];
    ensure(c.lattice.poset().is_cover(c.lattice.bottom(), a), "generator image must be an atom");
    return a;
}

std::vector<Elem> atoms_by_vertex(const Cambrian& c) {
    std::vector<Elem> out;
    for (int i = 1; i <= c.orientation.n; ++i) out.push_back(atom_for_vertex(c, i));
    return out;
}

}  // namespace latmut
