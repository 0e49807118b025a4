#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latmut/poset.hpp"

namespace latmut::test {

// Order relation as an n*n boolean matrix, from covers by repeated relaxation.
std::vector<std::vector<bool>> brute_order(const Poset& p);

// Least upper bound by scanning all upper bounds.
std::optional<Elem> brute_join(const Poset& p, Elem x, Elem y);
std::optional<Elem> brute_meet(const Poset& p, Elem x, Elem y);
bool brute_is_lattice(const Poset& p);

// Minimum descending covers over all covering walks with at most 2n steps.
std::vector<std::vector<int>> brute_distance(const Poset& p);

// Direct scan of both semidistributive laws.
bool brute_semidistributive(const Poset& p);

// Isomorphism by trying every bijection. Only for small posets.
bool brute_isomorphic(const Poset& p, const Poset& q);

// Lattices on n elements up to isomorphism, counted by brute force over
// naturally labelled covers and permutation-minimal keys. n <= 7.
std::size_t brute_lattice_count(std::size_t n);

// Known counts of unlabelled lattices on n = 0..8 elements.
inline const std::vector<std::size_t> kLatticeCounts{1, 1, 1, 1, 2, 5, 15, 53, 222};

// Triangulations of a convex m-gon, counted by enumerating non-crossing diagonal sets.
std::size_t brute_triangulation_count(int m);
// Centrally symmetric triangulations of a convex 2k-gon.
std::size_t brute_symmetric_triangulation_count(int k);

std::uint64_t catalan(int n);
std::uint64_t binomial(int n, int k);

}  // namespace latmut::test
