#pragma once

#include <Eigen/Dense>
#include <array>

namespace polymoduli {

// A labelled euclidean triangle: side a faces angle alpha, b faces beta,
// c faces gamma.
struct EuclideanTriangle {
    double a = 0, b = 0, c = 0;
    double alpha = 0, beta = 0, gamma = 0;
};

// Closing conditions of a euclidean triangle. Zero exactly on consistent
// side/angle data:
//   a cos(beta) + b cos(alpha) - c
//   b sin(alpha) - a sin(beta)
//   alpha + beta + gamma - pi
Eigen::Vector3d g_delta(const EuclideanTriangle& t);

// Analytic Jacobian of g_delta, columns ordered (a, b, c, alpha, beta, gamma).
Eigen::Matrix<double, 3, 6> jac_g_delta(const EuclideanTriangle& t);

// Angles (alpha, beta, gamma) opposite (a, b, c) via the law of cosines.
// Throws DegenerateTriangle when the sides do not span a triangle.
std::array<double, 3> solve_triangle_from_lengths(double a, double b, double c);

}  // namespace polymoduli
