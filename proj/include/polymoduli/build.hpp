#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "polymoduli/angle_data.hpp"
#include "polymoduli/complex.hpp"
#include "polymoduli/tolerances.hpp"

namespace polymoduli {

// A simplexwise linear map of the surface into 3-space. Faces may intersect
// each other; each single face must be an honest triangle.
struct PolyhedronEmbedding {
    Combinatoric K;
    std::vector<Eigen::Vector3d> coords;  // one point per vertex id
};

struct ExtractedAngles {
    SurfaceAngles sigma;
    DihedralAngles delta;
    EdgeLengths ell;
    std::vector<int> flat_edges;  // edges with dihedral angle pi
};

// Edge lengths, corner angles (law of cosines per face), and dihedral angles
// per edge. For edge {i,j} with oriented faces (i,j,k) and (j,i,l) the
// dihedral angle is measured about the direction i -> j from the k-side
// half-plane to the l-side half-plane, in (0,2*pi); the regular tetrahedron
// yields arccos(1/3) on every edge. Throws DegenerateFace for a collapsed
// face and ZeroDihedral for an edge folded flat onto itself.
ExtractedAngles extract_angles(const PolyhedronEmbedding& P);

// True when at every vertex each three cyclically consecutive edge
// directions are linearly independent, which reconstruction needs.
bool in_general_position(const PolyhedronEmbedding& P);

struct RigidMotion {
    Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
    Eigen::Vector3d t = Eigen::Vector3d::Zero();

    Eigen::Vector3d apply(const Eigen::Vector3d& p) const { return R * p + t; }
};

// The orientation-preserving isometry taking the source triple to the target
// triple pointwise. Throws Collinear when a triple spans no plane and
// NotCongruent when the pairwise distances disagree beyond tolerance.
RigidMotion rigid_motion_from_point_triples(const std::array<Eigen::Vector3d, 3>& src,
                                            const std::array<Eigen::Vector3d, 3>& dst);

// Rebuild a polyhedron from valid angle data on a genus-0 combinatoric:
// propagate edge lengths (base_edge gets length 1), realize the cones one
// disc-growth step at a time, and glue each new cone to the built part by
// the rigid motion aligning a shared face. Already-placed vertices must land
// where they already are: shared-face vertices within tol, vertices reached
// along the two boundary edge paths within tol::kClosureFactor * tol, else
// ClosureFailure naming the vertex. Throws NotAMember when the angle data
// fails the membership test, GenusNotZero for higher genus.
PolyhedronEmbedding reconstruct(const Combinatoric& K, const SurfaceAngles& sigma,
                                const DihedralAngles& delta,
                                double tol = tol::kResidual, int base_edge = 0);

struct SimilarityResult {
    bool same = false;
    double scale = 1.0;
    double max_deviation = 0.0;
};

// Best orientation-preserving similarity from P1's vertices to P2's, accepted
// when the worst vertex lands within tol::kSimilarity times P2's diameter.
// Mirror images are rejected since reflections are excluded. Throws
// CombinatoricMismatch when the complexes differ.
SimilarityResult similarity_compare(const PolyhedronEmbedding& P1,
                                    const PolyhedronEmbedding& P2);

}  // namespace polymoduli
