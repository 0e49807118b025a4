#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latmut/poset.hpp"
#include "latmut/quiver.hpp"

namespace latmut::test {

// Poset on named elements; each arrow (x, y) reads "y is covered by x".
Poset from_arrows(const std::vector<std::string>& names,
                  const std::vector<std::pair<std::string, std::string>>& arrows);

Poset chain(std::size_t n);
Poset diamond();
Poset bowtie();
Poset m3();
Poset hexagon();
Poset two_chains();
// Boolean lattice on three atoms, split as A (lower face) and B.
Poset cube();

// Hand-drawn lattices.
Poset tamari_a3_drawing();
Poset cambrian_a3_alternating_drawing();
Poset affine_tamari_drawing();
Poset tamari_b3_drawing();
// Seven elements: a square on a chain beside a pendant atom.
Poset pendant_lattice();
Poset pendant_lattice_mutated();
// Fourteen elements before and after reversing five crossing covers.
Poset crossing_example_before();
Poset crossing_example_after();
std::vector<std::string> crossing_example_footwall();

// Labelled mutation graphs of quivers, as (from, to) quiver pairs with multiplicity.
struct QuiverGraphEdge {
    WeightedQuiver from;
    WeightedQuiver to;
};
std::vector<QuiverGraphEdge> a3_quiver_mutation_graph();
std::vector<QuiverGraphEdge> b3_quiver_mutation_graph();

}  // namespace latmut::test
