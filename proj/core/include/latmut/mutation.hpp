#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "latmut/flip.hpp"
#include "latmut/lattice.hpp"

namespace latmut {

struct ACCorrespondence {
    Elem a;
    Elem a_prime;
    friend bool operator==(const ACCorrespondence&, const ACCorrespondence&) = default;
};

std::optional<ACCorrespondence> ac_correspondence_for_atom(const Lattice& l, Elem a);
std::optional<ACCorrespondence> ac_correspondence_for_coatom(const Lattice& l, Elem a_prime);
// All AC-correspondences, ordered by atom.
std::vector<ACCorrespondence> ac_correspondences(const Lattice& l);

// (x v a) ^ a'
Elem partial_down(const Lattice& l, const ACCorrespondence& ac, Elem x);
// (x ^ a') v a
Elem partial_up(const Lattice& l, const ACCorrespondence& ac, Elem x);

struct MutationVerdict {
    bool is_mutation = false;
    bool ac_ok = false;
    bool sublattice_ok = false;
    bool d_sublattice_ok = false;
    // Filled only when verification was requested.
    std::optional<bool> flipped_is_lattice;
};

// With verify set, also checks the flipped poset directly and throws if the
// criterion disagrees.
MutationVerdict check_mutation(const Lattice& l, const FlipPair& pair, bool verify = false);

FlipPair ac_flip_pair(const Lattice& l, const ACCorrespondence& ac);

struct Mutation {
    ACCorrespondence ac;
    Lattice result;
};

// Every AC flip that yields a lattice.
std::vector<Mutation> mutations(const Lattice& l);

bool is_locally_mutable(const Lattice& l);

struct MutabilityReport {
    bool is_mutable = false;
    std::size_t states = 0;
    // First lattice in the closure that is not locally mutable.
    std::optional<Poset> witness;
    // Every lattice visited, in BFS order.
    std::vector<Lattice> closure;
};

// Default 1e6, overridden by LATMUT_STATE_CAP.
std::size_t default_state_cap();

// Throws Overflow when the closure exceeds cap states.
MutabilityReport is_mutable(const Lattice& l, std::size_t cap = default_state_cap());

// u(x): unique z with D(x,y,z) = 0 for all y. Throws MutabilityViolation.
std::vector<Elem> u_map(const Lattice& l);

// Pushes a mutation pair through a surjective lattice homomorphism f: l -> m.
FlipPair quotient_flip(const Lattice& l, const FlipPair& pair, const Lattice& m,
                       const std::vector<Elem>& f);

struct IdealRestriction {
    // Ideal of the flipped lattice, with indices into it.
    SubPoset ideal;
    // Pair restricted to [0, x] of the original lattice; absent for the A-side extension.
    std::optional<FlipPair> restricted;
    Elem x_prime;
    bool extension = false;
};

std::optional<IdealRestriction> restrict_mutation_to_ideal(const Lattice& l, const FlipPair& pair,
                                                           Elem x);

// Checks x -> x v a is a lattice isomorphism dA -> dB with inverse y -> y ^ a'.
bool fault_plane_isomorphism_holds(const Lattice& l, const FlipPair& pair,
                                   const ACCorrespondence& ac);

}  // namespace latmut
