#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latmut/lattice.hpp"

namespace latmut {

struct Graph {
    std::size_t n = 0;
    // Sorted (min, max) pairs.
    std::vector<std::pair<Elem, Elem>> edges;
};

Graph make_graph(std::size_t n, std::vector<std::pair<Elem, Elem>> edges);
// Undirected Hasse graph of the A3 Tamari lattice.
Graph associahedron_graph();
// Two copies of a 10-vertex part glued along six shared vertices and three edges.
Graph glued_associahedron_graph();
// Incidence-poset isomorphism.
bool graphs_isomorphic(const Graph& g, const Graph& h);
// Number of cycles of the given length.
std::size_t cycle_count(const Graph& g, std::size_t length);

struct CensusClass {
    std::string canonical;
    std::size_t size = 0;
    std::string classification;
    bool locally_mutable = false;
    std::optional<std::size_t> regular_degree;
    std::size_t orientations = 0;
    Lattice representative;
};

struct Census {
    std::vector<CensusClass> classes;
    std::size_t orientations = 0;
    std::size_t single_source_sink = 0;
    std::size_t acyclic = 0;
    std::size_t lattices = 0;
};

// Every orientation whose Hasse diagram is the whole graph and which is a lattice.
Census orientation_census(const Graph& g);
Census associahedron_census();
std::string census_to_json(const Census& c);

}  // namespace latmut
