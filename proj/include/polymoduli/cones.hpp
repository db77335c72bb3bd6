#pragma once

#include <Eigen/Dense>
#include <vector>

#include "polymoduli/angle_data.hpp"
#include "polymoduli/complex.hpp"
#include "polymoduli/sphere.hpp"
#include "polymoduli/tolerances.hpp"

namespace polymoduli {

// Intersection of a polyhedral cone with the unit sphere at its apex: a
// spherical polygon A_1..A_n whose side between A_i and A_{i+1} has length
// sigma[i-1] (a face angle of the cone) and whose interior angle at A_i is
// delta[i-1] (a dihedral angle of the cone).
struct ConeAngles {
    std::vector<double> sigma;  // n values in (0, pi)
    std::vector<double> delta;  // n values in (0, 2*pi)

    int valency() const;  // n; throws SizeMismatch if sizes disagree or n < 3
};

// Auxiliary data of the fan triangulation of the polygon from A_1: triangle
// m (1-based, m = 1..n-2) has vertices A_1, A_{m+1}, A_{m+2} and angles
// alpha[m-1] at A_1, gamma[m-1] at A_{m+1}, beta[m-1] at A_{m+2}; c[m-1] is
// the diagonal from A_1 to A_{m+2} for m <= n-3. Each triangle's angles live
// jointly in (0,pi)^3 or (pi,2*pi)^3, recorded in branch.
struct ConeChart {
    std::vector<double> alpha, beta, gamma;  // n-2 each
    std::vector<double> c;                   // n-3 diagonal lengths in (0, pi)
    std::vector<AngleBranch> branch;         // n-2 per-triangle branches
};

// Residual of the cone system: 3 spherical-triangle rows per fan triangle
// (triangle m uses sides (sigma_{m+1}, b_m, c_m) where b_1 = sigma_1,
// b_m = c_{m-1}, and c_{n-2} = sigma_n), followed by the n dihedral assembly
// rows delta_1 - sum(alpha), delta_2 - gamma_1,
// delta_j - beta_{j-2} - gamma_{j-1} for 3 <= j <= n-1, delta_n - beta_{n-2}.
// Length 3*(n-2) + n. Throws SizeMismatch when the chart does not fit.
Eigen::VectorXd g_n(const ConeAngles& angles, const ConeChart& chart);

// Recover the chart from the cone angles alone: gamma_1 = delta_2 fixes the
// first triangle's branch and, with (sigma_1, sigma_2), its diagonal; the
// remaining triangles follow by splitting each polygon angle at the diagonal,
// gamma_m = delta_{m+1} - beta_{m-1}. Succeeds with a zero g_n residual
// exactly on valid cone data; elsewhere it either throws DegenerateCone (an
// angle leaves (0,pi) u (pi,2*pi), or a cosine leaves [-1,1]) or returns a
// chart with nonzero residual.
ConeChart lift_cone(const ConeAngles& angles);

// lift_cone + residual test; degenerate lifts count as non-membership.
bool check_cone_membership(const ConeAngles& angles, double tol = tol::kResidual);

// Unit vectors along the cone's edges: A_1 at the north pole, A_2 in the
// x-z half-plane with x >= 0, and A_{i+1} at colatitude c_{i-1} (sigma_n for
// the last vertex) and longitude -(alpha_1 + ... + alpha_{i-1}). Requires a
// chart with residual at most tol::kResidual (else NotASolution). Throws
// NotInGeneralPosition when three consecutive output vectors are linearly
// dependent.
std::vector<Eigen::Vector3d> realize_cone(const ConeAngles& angles,
                                          const ConeChart& chart);

// Dihedral angle in (0, 2*pi) about the oriented axis between the half-plane
// containing first_side and the half-plane containing second_side, measured
// so that a convex polyhedron edge (sides bending toward each other) gives a
// value below pi. Throws DegenerateFace when a side is parallel to the axis
// and ZeroDihedral when the half-planes coincide.
double dihedral_angle(const Eigen::Vector3d& axis, const Eigen::Vector3d& first_side,
                      const Eigen::Vector3d& second_side);

// Angles of the cone spanned by the given edge rays (not necessarily unit):
// sigma from consecutive ray angles, delta via dihedral_angle about each ray.
// Inverse of realize_cone up to the gauge. Throws DegenerateCone when
// consecutive rays are parallel.
ConeAngles extract_cone_angles(const std::vector<Eigen::Vector3d>& rays);

// Slice global angle data down to the cone at vertex k: side i is the face
// angle at k in faces_around(k)[i], polygon angle i sits on the edge from k
// to the i-th link neighbor.
ConeAngles cone_angles_at_vertex(const Combinatoric& K, const SurfaceAngles& sigma,
                                 const DihedralAngles& delta, int k);

// Stacked per-vertex cone residuals, vertex order ascending. charts must hold
// one entry per vertex (else MissingChart).
Eigen::VectorXd g_le(const Combinatoric& K, const SurfaceAngles& sigma,
                     const DihedralAngles& delta,
                     const std::vector<ConeChart>& charts);

}  // namespace polymoduli
