#include "polymoduli/euclid.hpp"

#include <cmath>
#include <string>

#include "polymoduli/errors.hpp"
#include "polymoduli/tolerances.hpp"

namespace polymoduli {

Eigen::Vector3d g_delta(const EuclideanTriangle& t) {
    Eigen::Vector3d r;
    r[0] = t.a * std::cos(t.beta) + t.b * std::cos(t.alpha) - t.c;
    r[1] = t.b * std::sin(t.alpha) - t.a * std::sin(t.beta);
    r[2] = t.alpha + t.beta + t.gamma - M_PI;
    return r;
}

Eigen::Matrix<double, 3, 6> jac_g_delta(const EuclideanTriangle& t) {
    Eigen::Matrix<double, 3, 6> J = Eigen::Matrix<double, 3, 6>::Zero();
    const double sa = std::sin(t.alpha), ca = std::cos(t.alpha);
    const double sb = std::sin(t.beta), cb = std::cos(t.beta);
    // row 0: a cos(beta) + b cos(alpha) - c
    J(0, 0) = cb;
    J(0, 1) = ca;
    J(0, 2) = -1.0;
    J(0, 3) = -t.b * sa;
    J(0, 4) = -t.a * sb;
    // row 1: b sin(alpha) - a sin(beta)
    J(1, 0) = -sb;
    J(1, 1) = sa;
    J(1, 3) = t.b * ca;
    J(1, 4) = -t.a * cb;
    // row 2: alpha + beta + gamma - pi
    J(2, 3) = 1.0;
    J(2, 4) = 1.0;
    J(2, 5) = 1.0;
    return J;
}

namespace {

double angle_opposite(double a, double b, double c) {
    const double denom = 2.0 * b * c;
    double x = (b * b + c * c - a * a) / denom;
    if (x > 1.0 + tol::kArccosClamp || x < -1.0 - tol::kArccosClamp)
        throw DegenerateTriangle("sides " + std::to_string(a) + ", " + std::to_string(b) +
                                 ", " + std::to_string(c) + " violate the triangle inequality");
    x = std::clamp(x, -1.0, 1.0);
    if (x == 1.0 || x == -1.0)
        throw DegenerateTriangle("sides " + std::to_string(a) + ", " + std::to_string(b) +
                                 ", " + std::to_string(c) + " span a flat triangle");
    return std::acos(x);
}

}  // namespace

std::array<double, 3> solve_triangle_from_lengths(double a, double b, double c) {
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        throw DegenerateTriangle("side lengths must be positive");
    return {angle_opposite(a, b, c), angle_opposite(b, c, a), angle_opposite(c, a, b)};
}

}  // namespace polymoduli
