#include "latmut/reference.hpp"

#include "latmut/cambrian.hpp"
#include "latmut/flip.hpp"

namespace latmut {

namespace {

Lattice from_pairs(std::size_t n, const Relation& covers) { return as_lattice(poset_from_covers(n, covers)); }

}  // namespace

Lattice tamari_a3() { return build_cambrian(make_orientation(CoxeterType::A, 3, "RR")).lattice; }

Lattice affine_tamari() {
    Cambrian c = build_cambrian(make_orientation(CoxeterType::A, 3, "RR"));
    return as_lattice(flip_on_atom(c.lattice.poset(), atom_for_vertex(c, 2)));
}

Lattice badcase_1() {
    return from_pairs(14, {{0, 1},  {0, 2},  {0, 3},  {1, 7},   {1, 10},  {2, 8},   {2, 10},
                           {3, 4},  {3, 5},  {4, 6},  {4, 7},   {5, 8},   {5, 9},   {6, 9},
                           {6, 11}, {7, 11}, {8, 12}, {9, 12},  {10, 13}, {11, 13}, {12, 13}});
}

Lattice badcase_2() {
    return from_pairs(14, {{0, 1},  {0, 2},  {0, 3},  {1, 6},   {1, 7},   {2, 4},   {2, 10},
                           {3, 4},  {3, 5},  {4, 12}, {5, 7},   {5, 9},   {6, 8},   {6, 10},
                           {7, 8},  {8, 11}, {9, 11}, {9, 12},  {10, 13}, {11, 13}, {12, 13}});
}

}  // namespace latmut
