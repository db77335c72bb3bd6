#pragma once

#include <array>
#include <random>
#include <vector>

#include "polymoduli/build.hpp"
#include "polymoduli/cones.hpp"

// Concrete polyhedra and randomized inputs shared by the test binaries.
// Everything is deterministic given the caller's generator state.
namespace fixtures {

polymoduli::PolyhedronEmbedding tetrahedron();
polymoduli::PolyhedronEmbedding octahedron();
polymoduli::PolyhedronEmbedding icosahedron();

// A unit cube, every square face split by a diagonal. The six diagonal
// edges are flat (dihedral angle pi), so this mesh exercises extraction
// and the flat-edge flag but cannot be reconstructed.
polymoduli::PolyhedronEmbedding cube_with_diagonals();

// Two tetrahedra glued at a single shared vertex: a pinched, non-surface
// face list for negative validation tests.
std::vector<std::array<int, 3>> pinched_faces();

// Two disjoint tetrahedra on vertex ids 0..7.
std::vector<std::array<int, 3>> disjoint_faces();

// A valid cone of the given valency, drawn by sampling a star-shaped
// spherical polygon around the north pole and extracting its angles.
// Redraws internally until the membership test passes.
polymoduli::ConeAngles random_cone(int n, std::mt19937_64& rng);

// Icosahedron with every vertex displaced by at most `relative` times the
// edge length, redrawn until the result is in general position.
polymoduli::PolyhedronEmbedding jittered_icosahedron(double relative,
                                                     std::mt19937_64& rng);

}  // namespace fixtures
