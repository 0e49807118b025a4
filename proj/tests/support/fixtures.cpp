#include "fixtures.hpp"

#include <map>
#include <stdexcept>

namespace latmut::test {

Poset from_arrows(const std::vector<std::string>& names,
                  const std::vector<std::pair<std::string, std::string>>& arrows) {
    std::map<std::string, Elem> index;
    for (const auto& n : names) index.emplace(n, index.size());
    Relation covers;
    for (const auto& [hi, lo] : arrows) covers.emplace_back(index.at(lo), index.at(hi));
    return poset_from_covers(names.size(), covers, names);
}

Poset chain(std::size_t n) {
    Relation covers;
    for (Elem i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return poset_from_covers(n, covers);
}

Poset diamond() { return poset_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

Poset bowtie() { return poset_from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Poset m3() { return poset_from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}); }

Poset hexagon() {
    return from_arrows({"e", "s1", "s2", "s1s2", "s2s1", "w0"},
                       {{"s1", "e"}, {"s2", "e"}, {"s1s2", "s1"}, {"s2s1", "s2"}, {"w0", "s1s2"}, {"w0", "s2s1"}});
}

Poset two_chains() { return poset_from_covers(4, {{0, 1}, {2, 3}}); }

Poset cube() {
    return from_arrows({"A0", "Ap", "Aq", "A1", "B0", "Bp", "Bq", "B1"},
                       {{"Ap", "A0"}, {"Aq", "A0"}, {"A1", "Ap"}, {"A1", "Aq"}, {"Bp", "B0"}, {"Bq", "B0"},
                        {"B1", "Bp"}, {"B1", "Bq"}, {"B0", "A0"}, {"Bp", "Ap"}, {"Bq", "Aq"}, {"B1", "A1"}});
}

namespace {

const std::vector<std::string> kFourteen{"A0", "A1", "A2", "A3", "A4", "A5", "A6",
                                         "A7", "A8", "A9", "Aa", "Ab", "Ac", "Ad"};

}  // namespace

Poset tamari_a3_drawing() {
    return from_arrows(kFourteen, {{"A0", "A1"}, {"A0", "A2"}, {"A0", "A3"}, {"A1", "A4"}, {"A1", "Aa"},
                                   {"A2", "A6"}, {"A2", "A8"}, {"A3", "A4"}, {"A3", "A5"}, {"A4", "Ab"},
                                   {"A5", "A6"}, {"A5", "A7"}, {"A6", "A9"}, {"A7", "A9"}, {"A7", "Ab"},
                                   {"A8", "Aa"}, {"A8", "Ac"}, {"A9", "Ac"}, {"Aa", "Ad"}, {"Ab", "Ad"},
                                   {"Ac", "Ad"}});
}

Poset cambrian_a3_alternating_drawing() {
    return from_arrows(kFourteen, {{"A0", "A1"}, {"A0", "A2"}, {"A0", "A3"}, {"A1", "A7"}, {"A1", "Ab"},
                                   {"A2", "A4"}, {"A2", "A5"}, {"A3", "A8"}, {"A3", "Ab"}, {"A4", "A6"},
                                   {"A4", "A7"}, {"A5", "A6"}, {"A5", "A8"}, {"A6", "A9"}, {"A7", "Aa"},
                                   {"A8", "Ac"}, {"A9", "Aa"}, {"A9", "Ac"}, {"Aa", "Ad"}, {"Ab", "Ad"},
                                   {"Ac", "Ad"}});
}

Poset affine_tamari_drawing() {
    return from_arrows(kFourteen, {{"A0", "A1"}, {"A0", "A2"}, {"A0", "A3"}, {"A1", "A4"}, {"A1", "A8"},
                                   {"A2", "A5"}, {"A2", "A9"}, {"A3", "A6"}, {"A3", "A7"}, {"A4", "A9"},
                                   {"A4", "Ab"}, {"A5", "A7"}, {"A5", "Ac"}, {"A6", "A8"}, {"A6", "Aa"},
                                   {"A7", "Aa"}, {"A8", "Ab"}, {"A9", "Ac"}, {"Aa", "Ad"}, {"Ab", "Ad"},
                                   {"Ac", "Ad"}});
}

Poset tamari_b3_drawing() {
    return from_arrows({"min", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o", "p", "q",
                        "r", "max"},
                       {{"a", "min"}, {"b", "min"}, {"c", "min"}, {"f", "a"}, {"p", "a"}, {"e", "b"}, {"h", "b"},
                        {"d", "c"}, {"f", "c"}, {"g", "d"}, {"h", "d"}, {"l", "e"}, {"m", "e"}, {"q", "f"},
                        {"j", "g"}, {"i", "g"}, {"i", "h"}, {"k", "i"}, {"n", "j"}, {"q", "j"}, {"m", "k"},
                        {"n", "k"}, {"p", "l"}, {"r", "l"}, {"o", "m"}, {"o", "n"}, {"r", "o"}, {"max", "p"},
                        {"max", "q"}, {"max", "r"}});
}

Poset pendant_lattice() {
    return from_arrows({"min", "C", "B1", "B2", "A", "D", "max"},
                       {{"max", "A"}, {"max", "D"}, {"A", "B1"}, {"A", "B2"}, {"B1", "C"}, {"B2", "C"},
                        {"C", "min"}, {"D", "min"}});
}

Poset pendant_lattice_mutated() {
    return from_arrows({"min", "C", "B", "A1", "A2", "D", "max"},
                       {{"max", "A1"}, {"max", "A2"}, {"max", "D"}, {"A1", "B"}, {"A2", "B"}, {"B", "C"},
                        {"C", "min"}, {"D", "min"}});
}

namespace {

const std::vector<std::string> kCrossingNames{"A0", "A1", "A2", "A3", "A4", "A5", "A6",
                                              "B0", "B1", "B2", "B3", "B4", "B5", "B6"};

std::vector<std::pair<std::string, std::string>> crossing_inner() {
    return {{"A1", "A0"}, {"A2", "A0"}, {"A3", "A1"}, {"A5", "A1"}, {"A4", "A2"}, {"A5", "A4"},
            {"A6", "A3"}, {"A6", "A5"}, {"B1", "B0"}, {"B3", "B0"}, {"B2", "B1"}, {"B5", "B1"},
            {"B4", "B2"}, {"B5", "B3"}, {"B6", "B4"}, {"B6", "B5"}};
}

const std::vector<std::pair<std::string, std::string>> kCrossing{
    {"A0", "B0"}, {"A2", "B2"}, {"A3", "B3"}, {"A4", "B4"}, {"A6", "B6"}};

}  // namespace

Poset crossing_example_before() {
    auto arrows = crossing_inner();
    for (const auto& [a, b] : kCrossing) arrows.emplace_back(a, b);
    return from_arrows(kCrossingNames, arrows);
}

Poset crossing_example_after() {
    auto arrows = crossing_inner();
    for (const auto& [a, b] : kCrossing) arrows.emplace_back(b, a);
    return from_arrows(kCrossingNames, arrows);
}

std::vector<std::string> crossing_example_footwall() { return {"B0", "B1", "B2", "B3", "B4", "B5", "B6"}; }

namespace {

WeightedQuiver path_quiver(std::vector<int> weights, bool first_right, bool second_right) {
    std::vector<std::tuple<int, int, int>> edges;
    edges.emplace_back(first_right ? 0 : 1, first_right ? 1 : 0, 1);
    edges.emplace_back(second_right ? 1 : 2, second_right ? 2 : 1, 1);
    return make_quiver(std::move(weights), edges);
}

WeightedQuiver cycle_quiver(std::vector<int> weights) {
    return make_quiver(std::move(weights), {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
}

}  // namespace

std::vector<QuiverGraphEdge> a3_quiver_mutation_graph() {
    const std::vector<int> w{1, 1, 1};
    auto rr = path_quiver(w, true, true);
    auto lr = path_quiver(w, false, true);
    auto rl = path_quiver(w, true, false);
    auto cyc = cycle_quiver(w);
    return {{rr, lr}, {lr, rr}, {lr, rr}, {rr, rl}, {rl, rr}, {rl, rr},
            {lr, rl}, {rl, lr}, {rr, cyc}, {cyc, rr}, {cyc, rr}, {cyc, rr}};
}

std::vector<QuiverGraphEdge> b3_quiver_mutation_graph() {
    const std::vector<int> w{1, 2, 2};
    auto rr = path_quiver(w, true, true);
    auto lr = path_quiver(w, false, true);
    auto rl = path_quiver(w, true, false);
    auto ll = path_quiver(w, false, false);
    auto cyc = cycle_quiver(w);
    return {{rr, lr}, {rr, rl}, {lr, rl}, {rl, ll}, {lr, ll}, {lr, rr}, {rl, rr}, {rl, lr},
            {ll, rl}, {ll, lr}, {rr, cyc}, {ll, cyc}, {cyc, rr}, {cyc, ll}, {cyc, cyc}};
}

}  // namespace latmut::test
