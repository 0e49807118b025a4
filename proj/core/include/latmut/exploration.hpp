#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latmut/coxeter.hpp"
#include "latmut/lattice.hpp"
#include "latmut/mutation.hpp"
#include "latmut/quiver.hpp"

namespace latmut {

struct MutationEdge {
    std::size_t from;
    std::size_t to;
    // Atom of the representative of `from`.
    Elem atom;
};

struct MutationGraph {
    std::vector<Lattice> representatives;
    std::vector<std::string> forms;
    // One edge per (class, atom) whose flip is a lattice.
    std::vector<MutationEdge> edges;
    // Atom flips that are not lattices, as (class, atom).
    std::vector<std::pair<std::size_t, Elem>> non_lattice_flips;
    // Classes that fail local mutability.
    std::vector<std::size_t> not_locally_mutable;

    std::size_t size() const { return representatives.size(); }
    std::optional<std::size_t> find(const std::string& form) const;
};

// BFS over isomorphism classes from the seed. Throws Overflow past cap classes.
MutationGraph mutation_graph(const Lattice& seed, std::size_t cap = default_state_cap());

// For y, z covering x: [x, y v z] is a polygon; and dually.
bool is_polygonal(const Lattice& l);
std::optional<std::size_t> regular_degree(const Lattice& l);

// Atom order of the flipped lattice matching the quiver vertices of l:
// vertex i goes to the old bottom, vertex j to the new atom below a_i v a_j.
std::vector<Elem> mutated_atom_order(const Lattice& l, const std::vector<Elem>& atoms, std::size_t i,
                                     const Lattice& flipped);

struct ClassReport {
    std::size_t index = 0;
    std::size_t size = 0;
    bool locally_mutable = false;
    bool polygonal = false;
    bool semidistributive = false;
    std::optional<std::size_t> regular_degree;
    bool u_map_ok = false;
    // Set when a type is given.
    std::optional<std::string> quiver_key;
    std::optional<bool> quiver_commutes;
};

struct ConjectureReport {
    std::vector<ClassReport> classes;
    bool all_lattices = false;
    bool all_pass = false;
};

ConjectureReport verify_ordovician_conjectures(const MutationGraph& g,
                                               std::optional<CoxeterType> type = std::nullopt);

struct QuotientObstruction {
    bool obstructed = false;
    // Witness atoms and their pairwise t-values (ab, bc, ca).
    std::vector<Elem> atoms;
    std::vector<std::size_t> t_values;
};

// Some atom triple with every pairwise t at least 5. Throws PreconditionFailed below 3 atoms.
QuotientObstruction not_coxeter_quotient(const Lattice& l);

// Canonical forms of every lattice quotient of the weak order (brute force over congruences).
std::vector<std::string> weak_order_quotient_forms(CoxeterType type, int n);

std::string mutation_graph_to_json(const MutationGraph& g, std::optional<CoxeterType> type = std::nullopt);
std::string mutation_graph_to_dot(const MutationGraph& g, std::optional<CoxeterType> type = std::nullopt);

}  // namespace latmut
