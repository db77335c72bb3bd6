#pragma once

#include <vector>

namespace polymoduli {

// Face angles, one per corner, indexed by corner id (3*face + slot in the
// stored vertex order). Values live in (0, pi).
struct SurfaceAngles {
    std::vector<double> sigma;
};

// One angle per edge, indexed by edge id, in (0, 2*pi). The value pi marks a
// flat edge; it is legal data but degenerate for cone realization.
struct DihedralAngles {
    std::vector<double> delta;
};

// One positive length per edge, indexed by edge id.
struct EdgeLengths {
    std::vector<double> ell;
};

}  // namespace polymoduli
