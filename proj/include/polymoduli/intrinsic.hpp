#pragma once

#include <Eigen/Dense>

#include "polymoduli/angle_data.hpp"
#include "polymoduli/complex.hpp"
#include "polymoduli/tolerances.hpp"

namespace polymoduli {

// Per-face euclidean triangle residuals, stacked in face id order (3 rows per
// face). For the stored face (i, j, k) the triangle arguments are the side
// lengths (l_ij, l_jk, l_ki) and the angles (sigma at k, sigma at i, sigma
// at j), so each side faces the angle at the opposite vertex.
Eigen::VectorXd g_in(const Combinatoric& K, const EdgeLengths& ell,
                     const SurfaceAngles& sigma);

// Chain the law of sines over face adjacencies, breadth-first from base_edge,
// to produce the unique edge lengths with ell(base_edge) = base_length that
// are compatible with sigma on every face. Denominators are sines of angles
// in (0, pi), so the chain never divides by zero; consistency of the result
// across different paths is exactly membership of sigma in the flat-cone
// solution set.
EdgeLengths propagate_lengths(const Combinatoric& K, const SurfaceAngles& sigma,
                              int base_edge, double base_length);

struct IntrinsicMembership {
    bool member = false;
    EdgeLengths ell;      // propagated lengths, meaningful whenever returned
    double max_residual = 0.0;
};

// Propagate lengths from base_edge (default: the lexicographically smallest
// edge) with base length 1, then accept iff the max-norm residual of g_in is
// at most tol * (1 + base_length).
IntrinsicMembership check_in_membership(const Combinatoric& K,
                                        const SurfaceAngles& sigma,
                                        double tol = tol::kResidual,
                                        int base_edge = 0);

}  // namespace polymoduli
