#pragma once

#include <array>
#include <utility>
#include <vector>

namespace polymoduli {

// The angle slot of a two-simplex at one of its vertices. `center` is the
// vertex carrying the angle, the wings are the other two vertices of the
// face, stored sorted.
struct Corner {
    int face = -1;
    int center = -1;
    int wing_lo = -1;
    int wing_hi = -1;
};

// An oriented closed triangulated surface, given by its two-simplices with
// a consistent orientation. Immutable after construction; all incidence
// data is precomputed.
//
// Canonical orderings used throughout the library:
//   - face triples are rotated so the smallest vertex comes first,
//   - edges are sorted pairs (lo, hi), listed lexicographically,
//   - corners are listed per face in triple order (ids 3 f + 0, 1, 2),
//   - vertex links start at the smallest neighbour and follow the
//     orientation induced by the faces.
class Combinatoric {
public:
    // Validates and indexes a face list. Throws InvalidComplex,
    // NonManifoldEdge, InconsistentOrientation, PinchedVertex or
    // DisconnectedComplex.
    static Combinatoric from_faces(const std::vector<std::array<int, 3>>& faces);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int genus() const { return genus_; }

    const std::vector<std::array<int, 3>>& faces() const { return faces_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<Corner>& corners() const { return corners_; }

    // Id of the undirected edge {a, b}; throws MissingEntry if absent.
    int edge_index(int a, int b) const;

    // Edge ids ({i,j}, {j,k}, {k,i}) of the stored triple (i, j, k).
    const std::array<int, 3>& face_edges(int f) const { return face_edges_[f]; }

    // Faces at an edge (lo, hi): [0] traverses lo->hi, [1] traverses hi->lo.
    const std::array<int, 2>& edge_faces(int e) const { return edge_faces_[e]; }

    // Corner id of face f at vertex `center`; throws MissingEntry.
    int corner_index(int f, int center) const;

    int valency(int k) const { return static_cast<int>(links_[k].size()); }

    // Neighbours of k in cyclic order.
    const std::vector<int>& vertex_link(int k) const { return links_[k]; }

    // faces_around(k)[i] is the face {link[i], link[i+1], k}.
    const std::vector<int>& faces_around(int k) const { return faces_around_[k]; }

private:
    Combinatoric() = default;

    int vertex_count_ = 0;
    int genus_ = 0;
    std::vector<std::array<int, 3>> faces_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Corner> corners_;
    std::vector<std::array<int, 3>> face_edges_;
    std::vector<std::array<int, 2>> edge_faces_;
    std::vector<std::vector<int>> links_;
    std::vector<std::vector<int>> faces_around_;
};

// Dual one- and two-skeleton of a Combinatoric. Nodes are faces of K; the
// dual edge with id e crosses the primal edge e; the two-cell of primal
// vertex k is the circuit of faces around k, in link order.
struct DualGraph {
    int node_count = 0;
    std::vector<std::pair<int, int>> edge_nodes;  // faces on the two sides of each primal edge
    std::vector<std::pair<int, int>> edge_cells;  // two-cells containing each dual edge
    std::vector<std::vector<int>> cells;          // per primal vertex: circuit of faces
};

DualGraph dual_graph(const Combinatoric& K);

// Ordering k_1, ..., k_V of all vertices such that each prefix union of
// closed stars is a combinatorial disc until the whole sphere is covered,
// each next vertex lying on the boundary of the previous disc and meeting
// it in a contiguous fan plus boundary arcs. Greedy with backtracking,
// smallest candidate first. Genus 0 only.
std::vector<int> disc_growth_order(const Combinatoric& K);

}  // namespace polymoduli
