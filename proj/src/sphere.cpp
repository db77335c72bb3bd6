#include "polymoduli/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polymoduli/errors.hpp"
#include "polymoduli/tolerances.hpp"

namespace polymoduli {

Eigen::Vector3d g_three(const SphericalTriangle& t) {
    const double ca = std::cos(t.a), sa = std::sin(t.a);
    const double cb = std::cos(t.b), sb = std::sin(t.b);
    const double cc = std::cos(t.c), sc = std::sin(t.c);
    Eigen::Vector3d r;
    r[0] = cb * cc + sb * sc * std::cos(t.alpha) - ca;
    r[1] = cc * ca + sc * sa * std::cos(t.beta) - cb;
    r[2] = ca * cb + sa * sb * std::cos(t.gamma) - cc;
    return r;
}

Eigen::Matrix<double, 3, 6> jac_g_three(const SphericalTriangle& t) {
    const double ca = std::cos(t.a), sa = std::sin(t.a);
    const double cb = std::cos(t.b), sb = std::sin(t.b);
    const double cc = std::cos(t.c), sc = std::sin(t.c);
    const double cal = std::cos(t.alpha), sal = std::sin(t.alpha);
    const double cbe = std::cos(t.beta), sbe = std::sin(t.beta);
    const double cga = std::cos(t.gamma), sga = std::sin(t.gamma);
    Eigen::Matrix<double, 3, 6> J = Eigen::Matrix<double, 3, 6>::Zero();
    // row 0: cos(b) cos(c) + sin(b) sin(c) cos(alpha) - cos(a)
    J(0, 0) = sa;
    J(0, 1) = -sb * cc + cb * sc * cal;
    J(0, 2) = -cb * sc + sb * cc * cal;
    J(0, 3) = -sb * sc * sal;
    // row 1: cos(c) cos(a) + sin(c) sin(a) cos(beta) - cos(b)
    J(1, 0) = -cc * sa + sc * ca * cbe;
    J(1, 1) = sb;
    J(1, 2) = -sc * ca + cc * sa * cbe;
    J(1, 4) = -sc * sa * sbe;
    // row 2: cos(a) cos(b) + sin(a) sin(b) cos(gamma) - cos(c)
    J(2, 0) = -sa * cb + ca * sb * cga;
    J(2, 1) = -ca * sb + sa * cb * cga;
    J(2, 2) = sc;
    J(2, 5) = -sa * sb * sga;
    return J;
}

namespace {

double checked_acos(double x, const char* context) {
    if (x > 1.0 + tol::kArccosClamp || x < -1.0 - tol::kArccosClamp)
        throw DegenerateSphericalTriangle(std::string(context) + ": arccos argument " +
                                          std::to_string(x) + " out of range");
    x = std::clamp(x, -1.0, 1.0);
    if (x == 1.0 || x == -1.0)
        throw DegenerateSphericalTriangle(std::string(context) + ": configuration collapses to 0 or pi");
    return std::acos(x);
}

}  // namespace

double side_from_two_sides_and_angle(double b, double c, double alpha) {
    const double x = std::cos(b) * std::cos(c) + std::sin(b) * std::sin(c) * std::cos(alpha);
    return checked_acos(x, "side_from_two_sides_and_angle");
}

double angle_from_three_sides(double a, double b, double c, AngleBranch branch) {
    const double denom = std::sin(b) * std::sin(c);
    const double x = (std::cos(a) - std::cos(b) * std::cos(c)) / denom;
    const double lower = checked_acos(x, "angle_from_three_sides");
    return branch == AngleBranch::lower ? lower : 2.0 * M_PI - lower;
}

}  // namespace polymoduli
