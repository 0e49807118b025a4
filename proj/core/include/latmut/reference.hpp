#pragma once

#include "latmut/lattice.hpp"

namespace latmut {

// The A3 Tamari lattice (uniform orientation).
Lattice tamari_a3();
// Flip of the A3 Tamari lattice at the atom of its middle quiver vertex.
Lattice affine_tamari();
// Two exotic lattice orientations of the A3 associahedron graph; both
// 3-regular and not locally mutable.
Lattice badcase_1();
Lattice badcase_2();

}  // namespace latmut
