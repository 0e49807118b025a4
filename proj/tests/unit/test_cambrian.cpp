#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "latmut/cambrian.hpp"
#include "latmut/canonical.hpp"
#include "latmut/errors.hpp"
#include "latmut/flip.hpp"
#include "latmut/generate.hpp"
#include "latmut/mutation.hpp"
#include "oracles.hpp"

using namespace latmut;
using namespace latmut::test;

namespace {

PermA random_perm_a(int n, Rng& rng) {
    auto p = random_permutation(static_cast<std::size_t>(n + 1), rng);
    PermA out;
    for (auto v : p) out.images.push_back(static_cast<int>(v) + 1);
    return out;
}

PermB random_perm_b(int n, Rng& rng) {
    auto p = random_permutation(static_cast<std::size_t>(n), rng);
    std::uniform_int_distribution<int> coin(0, 1);
    PermB out;
    for (auto v : p) out.images.push_back((coin(rng) ? 1 : -1) * (static_cast<int>(v) + 1));
    return out;
}

LabelledPolygon random_polygon(CoxeterType type, int n, Rng& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    LabelledPolygon p{type, n, {}};
    int labels = type == CoxeterType::A ? n + 1 : n;
    for (int i = 0; i < labels; ++i) p.upper.push_back(coin(rng) == 1);
    return p;
}

bool non_crossing(const LabelledPolygon& p, const Triangulation& t) {
    for (std::size_t i = 0; i < t.diagonals.size(); ++i) {
        if (is_boundary(p, t.diagonals[i])) return false;
        for (std::size_t j = i + 1; j < t.diagonals.size(); ++j)
            if (crosses(p, t.diagonals[i], t.diagonals[j])) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("polygon specs") {
    LabelledPolygon p = parse_polygon("A3:UL");
    CHECK(p.type == CoxeterType::A);
    CHECK(p.n == 3);
    CHECK(p.upper.size() == 4);
    CHECK(parse_polygon(polygon_to_string(p)) == p);
    CHECK(parse_polygon("B3:UU").type == CoxeterType::B);
    CHECK_THROWS_AS(parse_polygon("C3:UU"), ParseError);
    CHECK_THROWS_AS(parse_polygon("A3:UX"), ParseError);
    CHECK_THROWS_AS(parse_polygon("A3:U"), ParseError);
    for (const auto& o : all_orientations(CoxeterType::A, 4)) {
        CHECK(orientation_from_polygon(polygon_from_orientation(o)) == o);
        CHECK(orientation_from_polygon(parse_polygon(orientation_spec(o))) == o);
    }
    for (const auto& o : all_orientations(CoxeterType::B, 3))
        CHECK(orientation_from_polygon(parse_polygon(orientation_spec(o))) == o);
}

TEST_CASE("triangulation text") {
    Triangulation t = parse_triangulation("2-3,0-3");
    CHECK(to_string(t) == "0-3,2-3");
    CHECK(to_string(parse_triangulation("-3-1,-1-3")) == "-3-1,-1-3");
    CHECK_THROWS_AS(parse_triangulation("0-"), ParseError);
}

TEST_CASE("eta examples") {
    LabelledPolygon p{CoxeterType::A, 5, {true, true, false, true, false, true}};
    CHECK(to_string(eta(p, PermA{{1, 4, 3, 6, 5, 2}})) == "1-3,1-4,3-4,4-5,5-6");
    LabelledPolygon q{CoxeterType::A, 2, {false, true, false}};
    CHECK(to_string(eta(q, identity_a(2))) == "0-3,2-3");
}

TEST_CASE("eta_b examples") {
    LabelledPolygon p{CoxeterType::B, 2, {false, false}};
    Triangulation t = eta_b(p, identity_b(2));
    CHECK(t.diagonals.size() == 3);
    CHECK(is_point_symmetric(t));
    Cambrian b3 = build_cambrian(make_orientation(CoxeterType::B, 3, "RR"));
    CHECK(b3.triangulations[b3.lattice.bottom()] == eta_b(b3.polygon, identity_b(3)));
}

TEST_CASE("pattern classes match eta fibres") {
    LabelledPolygon q{CoxeterType::A, 2, {false, true, false}};
    CHECK(pattern_kernel_equal(q, PermA{{2, 3, 1}}, PermA{{2, 3, 1}}));
    CHECK(pattern_kernel_equal(q, PermA{{2, 3, 1}}, PermA{{2, 1, 3}}));
    CHECK(eta(q, PermA{{2, 3, 1}}) == eta(q, PermA{{2, 1, 3}}));
    CHECK_FALSE(pattern_kernel_equal(q, PermA{{2, 1, 3}}, PermA{{1, 3, 2}}));
}

TEST_CASE("pattern classes are eta fibres for A3") {
    for (const auto& o : all_orientations(CoxeterType::A, 3)) {
        LabelledPolygon p = polygon_from_orientation(o);
        WeakOrder w = build_weak_order(CoxeterType::A, 3);
        for (Elem x = 0; x < w.size(); ++x) {
            PermA sx{w.images(x)};
            auto cls = pattern_class(p, sx);
            std::set<std::vector<int>> members;
            for (const auto& c : cls) {
                members.insert(c.images);
                CHECK(eta(p, c) == eta(p, sx));
            }
            for (Elem y = 0; y < w.size(); ++y)
                if (eta(p, PermA{w.images(y)}) == eta(p, sx)) CHECK(members.count(w.images(y)) == 1);
        }
    }
}

TEST_CASE("Cambrian lattice sizes") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& o : all_orientations(CoxeterType::A, n)) {
            Cambrian c = build_cambrian(o);
            CHECK(c.lattice.size() == catalan(n + 1));
            CHECK(all_triangulations(c.polygon).size() == brute_triangulation_count(n + 3));
        }
    for (int n = 1; n <= 3; ++n)
        for (const auto& o : all_orientations(CoxeterType::B, n)) {
            Cambrian c = build_cambrian(o);
            CHECK(c.lattice.size() == binomial(2 * n, n));
            CHECK(all_triangulations(c.polygon).size() == brute_symmetric_triangulation_count(n + 1));
        }
    CHECK(build_cambrian(make_orientation(CoxeterType::A, 3, "RR")).lattice.size() == 14);
    CHECK(build_cambrian(make_orientation(CoxeterType::B, 3, "RR")).lattice.size() == 20);
    CHECK_THROWS_AS(build_cambrian(all_orientations(CoxeterType::A, 6).front()), RankCapExceeded);
}

TEST_CASE("Cambrian lattices match the drawings") {
    CHECK(are_isomorphic(build_cambrian(make_orientation(CoxeterType::A, 3, "RR")).lattice.poset(),
                         tamari_a3_drawing()));
    CHECK(are_isomorphic(build_cambrian(make_orientation(CoxeterType::B, 3, "LL")).lattice.poset(),
                         tamari_b3_drawing()));
    CHECK(are_isomorphic(build_cambrian(make_orientation(CoxeterType::B, 3, "RR")).lattice.poset(),
                         dual(tamari_b3_drawing())));
    bool alternating = false;
    for (const auto& o : all_orientations(CoxeterType::A, 3))
        alternating = alternating ||
                      are_isomorphic(build_cambrian(o).lattice.poset(), cambrian_a3_alternating_drawing());
    CHECK(alternating);
}

TEST_CASE("cover orientation") {
    LabelledPolygon up{CoxeterType::A, 2, {false, true, false}};
    CHECK(cover_orientation(up, {0, 3}, {1, 2}) == Diagonal{0, 3});
    LabelledPolygon down{CoxeterType::A, 2, {true, false, true}};
    CHECK(cover_orientation(down, {1, 4}, {2, 3}) == Diagonal{1, 4});
    CHECK(cover_orientation(down, {0, 3}, {1, 2}) == Diagonal{1, 2});
    CHECK_THROWS_AS(cover_orientation(down, {0, 3}, {0, 4}), PreconditionFailed);
}

TEST_CASE("direct construction agrees with the weak order projection") {
    Lattice pentagon = direct_cambrian(make_orientation(CoxeterType::A, 2, "R"));
    CHECK(pentagon.size() == 5);
    auto poly = is_polygon(pentagon);
    REQUIRE(poly.has_value());
    CHECK(poly->first + poly->second == 5);
    for (int n = 1; n <= 4; ++n)
        for (const auto& o : all_orientations(CoxeterType::A, n)) CHECK(direct_cambrian(o) == build_cambrian(o).lattice);
    for (int n = 1; n <= 3; ++n)
        for (const auto& o : all_orientations(CoxeterType::B, n)) CHECK(direct_cambrian(o) == build_cambrian(o).lattice);
    CHECK(direct_cambrian(make_orientation(CoxeterType::B, 2, "R")).size() == 6);
}

TEST_CASE("atoms of quiver vertices") {
    for (const auto& o : all_orientations(CoxeterType::A, 3)) {
        Cambrian c = build_cambrian(o);
        auto atoms = atoms_by_vertex(c);
        std::set<Elem> distinct(atoms.begin(), atoms.end());
        auto lattice_atoms = c.lattice.atoms();
        CHECK(distinct == std::set<Elem>(lattice_atoms.begin(), lattice_atoms.end()));
        CHECK(atom_for_vertex(c, 1) == c.projection[c.weak.generator(1)]);
    }
    Cambrian b2 = build_cambrian(make_orientation(CoxeterType::B, 2, "R"));
    auto neg = b2.weak.index_of({-1, 2});
    REQUIRE(neg.has_value());
    CHECK(atom_for_vertex(b2, 1) == b2.projection[*neg]);
}

TEST_CASE("property: eta produces triangulations") {
    Rng rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + trial % 6;
        LabelledPolygon p = random_polygon(CoxeterType::A, n, rng);
        Triangulation t = eta(p, random_perm_a(n, rng));
        CHECK(t.diagonals.size() == static_cast<std::size_t>(n));
        CHECK(non_crossing(p, t));
    }
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + trial % 4;
        LabelledPolygon p = random_polygon(CoxeterType::B, n, rng);
        Triangulation t = eta_b(p, random_perm_b(n, rng));
        CHECK(is_point_symmetric(t));
        CHECK(t.diagonals.size() == static_cast<std::size_t>(2 * n - 1));
        CHECK(non_crossing(p, t));
    }
}

TEST_CASE("property: end labels do not matter") {
    for (int n = 1; n <= 3; ++n) {
        WeakOrder w = build_weak_order(CoxeterType::A, n);
        for (const auto& o : all_orientations(CoxeterType::A, n)) {
            LabelledPolygon base = polygon_from_orientation(o);
            for (int mask = 0; mask < 4; ++mask) {
                LabelledPolygon p = base;
                p.upper.front() = mask & 1;
                p.upper.back() = (mask >> 1) & 1;
                for (Elem x = 0; x < w.size(); ++x)
                    for (Elem y = 0; y < w.size(); ++y) {
                        PermA sx{w.images(x)}, sy{w.images(y)};
                        CHECK((eta(p, sx) == eta(p, sy)) == (eta(base, sx) == eta(base, sy)));
                    }
            }
        }
    }
}

TEST_CASE("property: reversing every edge gives the dual") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& o : all_orientations(CoxeterType::A, n))
            CHECK(are_isomorphic(build_cambrian(reverse_all(o)).lattice.poset(), dual(build_cambrian(o).lattice.poset())));
}

TEST_CASE("property: Cambrian mutation at sinks and sources") {
    for (auto [type, cap] : {std::pair{CoxeterType::A, 4}, std::pair{CoxeterType::B, 3}})
        for (int n = 1; n <= cap; ++n)
            for (const auto& o : all_orientations(type, n)) {
                Cambrian c = build_cambrian(o);
                CHECK(is_locally_mutable(c.lattice));
                for (int i = 1; i <= n; ++i) {
                    if (!is_sink_or_source(o, i)) continue;
                    Poset m = flip_on_atom(c.lattice.poset(), atom_for_vertex(c, i));
                    CHECK(are_isomorphic(m, build_cambrian(reflect(o, i)).lattice.poset()));
                }
            }
}
