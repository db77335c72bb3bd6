#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polymoduli/complex.hpp"

namespace polymoduli {

// A corner of the dual two-cell `cell` at the dual node `node` (primal: the
// face angle of face `node` at vertex `cell`).
struct DualCorner {
    int cell = -1;
    int node = -1;
};

// An arrow on dual edge `edge` pointing out of the two-cell `out_of` (and
// into the other cell of that edge).
struct Arrow {
    int edge = -1;
    int out_of = -1;
};

struct DualColoring {
    std::vector<DualCorner> corners;
    std::vector<Arrow> arrows;
};

// True iff every two-cell carries exactly three colors: arrows on its
// boundary edges pointing out of it plus its colored corners. Duplicate
// entries count once. Throws ForeignSimplex when the coloring references
// edges, cells, or corners that do not exist in D.
bool is_admissible(const DualGraph& D, const DualColoring& col);

struct ColoringResult {
    bool found = false;
    DualColoring coloring;
};

// Search for a coloring witnessing the elimination pattern. Genus 0: exactly
// one arrow on every dual edge plus the six corners of the two-cell pair
// adjacent_pair (two adjacent dual nodes; defaults to the nodes of dual edge
// 0). Genus >= 1: no corners, one arrow on all but 6g-6 edges, the bare
// edges chosen by the search. A failed search returns found = false; that is
// data about the instance, not an error. Throws ArgumentMismatch when a pair
// is supplied for genus >= 1 or the pair is not adjacent.
ColoringResult find_epc_coloring(const DualGraph& D, int genus,
                                 std::optional<std::pair<int, int>> adjacent_pair = {});

// Stable text form: `arrow e -> cell` lines (the cell the arrow points into)
// sorted by edge id, then `corner cell prev node next` lines giving each
// colored corner with its flanking nodes on the cell's circuit.
std::string format_coloring(const DualGraph& D, const DualColoring& col);

}  // namespace polymoduli
