#pragma once

#include <Eigen/Dense>

namespace polymoduli {

// Which component of the admissible angle domain a spherical triangle
// lives in: all three angles in (0, pi) or all three in (pi, 2 pi).
enum class AngleBranch { lower, upper };

// A labelled spherical triangle with sides in (0, pi); side a faces
// angle alpha and so on, cyclically.
struct SphericalTriangle {
    double a = 0, b = 0, c = 0;
    double alpha = 0, beta = 0, gamma = 0;
    AngleBranch branch = AngleBranch::lower;
};

// Closing conditions of a spherical triangle (cyclic law of cosines):
//   cos(b) cos(c) + sin(b) sin(c) cos(alpha) - cos(a)
//   cos(c) cos(a) + sin(c) sin(a) cos(beta)  - cos(b)
//   cos(a) cos(b) + sin(a) sin(b) cos(gamma) - cos(c)
Eigen::Vector3d g_three(const SphericalTriangle& t);

// Analytic Jacobian of g_three, columns ordered (a, b, c, alpha, beta, gamma).
Eigen::Matrix<double, 3, 6> jac_g_three(const SphericalTriangle& t);

// Side opposite an angle alpha enclosed by sides b and c.
// alpha may lie anywhere in (0, 2 pi) \ {pi}.
double side_from_two_sides_and_angle(double b, double c, double alpha);

// Angle opposite side a in a triangle with sides (a, b, c), placed on the
// requested branch.
double angle_from_three_sides(double a, double b, double c, AngleBranch branch);

}  // namespace polymoduli
