#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "latmut/flip.hpp"
#include "latmut/lattice.hpp"

namespace latmut {

using Rng = std::mt19937_64;

// Every lattice with n elements, one per isomorphism class, in canonical-form order.
std::vector<Lattice> all_lattices(std::size_t n);

// Transitive closure of random pairs i < j kept with probability density.
Poset random_poset(std::size_t n, double density, Rng& rng);
Poset random_connected_poset(std::size_t n, double density, Rng& rng);
// Bounded random poset on n elements, resampled until it is a lattice.
Lattice random_lattice(std::size_t n, Rng& rng);
// Down-closure of a random subset, resampled until both sides are nonempty.
FlipPair random_flip_pair(std::shared_ptr<const Poset> p, Rng& rng);
std::vector<Elem> random_permutation(std::size_t n, Rng& rng);

}  // namespace latmut
