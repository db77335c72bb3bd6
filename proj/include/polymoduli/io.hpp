#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "polymoduli/angle_data.hpp"
#include "polymoduli/build.hpp"
#include "polymoduli/complex.hpp"

namespace polymoduli {

// All readers strip '#' comments and blank lines, and throw ParseError with a
// line number for anything malformed. Writers print floats with 17
// significant digits so round trips are exact.

// Line-based complex format: a `complex V F` header, then F lines `f i j k`
// with oriented vertex indices.
std::vector<std::array<int, 3>> read_complex_file(const std::string& path);
void write_complex_file(const std::string& path, const Combinatoric& K);

// Angle data for a known complex: an `angles V E F` header, one line
// `s i j k value` per corner (the face {i,j,k} with center j), one line
// `d i j value` per edge. Every corner and edge must appear exactly once and
// every value must lie in its range.
std::pair<SurfaceAngles, DihedralAngles> read_angles_file(const std::string& path,
                                                          const Combinatoric& K);
void write_angles_file(const std::string& path, const Combinatoric& K,
                       const SurfaceAngles& sigma, const DihedralAngles& delta);

// Triangle-only OBJ subset: `v x y z` and `f i j k` records with 1-based
// positive indices; any other record kind is rejected.
PolyhedronEmbedding read_obj(const std::string& path);
void write_obj(const std::string& path, const PolyhedronEmbedding& P);

}  // namespace polymoduli
