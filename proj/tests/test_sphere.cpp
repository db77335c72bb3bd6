#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "polymoduli/errors.hpp"
#include "polymoduli/moduli.hpp"
#include "polymoduli/sphere.hpp"

using namespace polymoduli;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("the octant triangle closes") {
    SphericalTriangle t{kPi / 2, kPi / 2, kPi / 2, kPi / 2, kPi / 2, kPi / 2,
                        AngleBranch::lower};
    CHECK(g_three(t).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("equilateral spherical triangle with side pi/3") {
    // law of cosines gives cos(angle) = 1/3 for this side length
    const double a = std::acos(1.0 / 3.0);
    SphericalTriangle lower{kPi / 3, kPi / 3, kPi / 3, a, a, a, AngleBranch::lower};
    CHECK(g_three(lower).cwiseAbs().maxCoeff() < 1e-15);

    // the complementary angles solve the same cosine equations
    SphericalTriangle upper{kPi / 3, kPi / 3, kPi / 3, 2 * kPi - a, 2 * kPi - a,
                            2 * kPi - a, AngleBranch::upper};
    CHECK(g_three(upper).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("analytic spherical jacobian agrees with central differences") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> side(0.3, 2.6);
    std::uniform_real_distribution<double> angle(0.2, 6.0);
    auto f = [](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        SphericalTriangle t{x[0], x[1], x[2], x[3], x[4], x[5], AngleBranch::lower};
        return g_three(t);
    };
    for (int trial = 0; trial < 6; ++trial) {
        Eigen::VectorXd x(6);
        x << side(rng), side(rng), side(rng), angle(rng), angle(rng), angle(rng);
        SphericalTriangle t{x[0], x[1], x[2], x[3], x[4], x[5], AngleBranch::lower};
        Eigen::MatrixXd numeric = central_difference_jacobian(f, x);
        CHECK((jac_g_three(t) - numeric).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("side_from_two_sides_and_angle") {
    CHECK(side_from_two_sides_and_angle(kPi / 2, kPi / 2, kPi / 2) ==
          doctest::Approx(kPi / 2).epsilon(1e-12));
    // a reflex enclosed angle has the same cosine as its complement
    CHECK(side_from_two_sides_and_angle(kPi / 2, kPi / 2, 3 * kPi / 2) ==
          doctest::Approx(kPi / 2).epsilon(1e-12));

    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> side(0.4, 2.0);
    std::uniform_real_distribution<double> angle(0.3, 2.7);
    for (int trial = 0; trial < 10; ++trial) {
        double b = side(rng), c = side(rng), alpha = angle(rng);
        double a = side_from_two_sides_and_angle(b, c, alpha);
        double row = std::cos(b) * std::cos(c) +
                     std::sin(b) * std::sin(c) * std::cos(alpha) - std::cos(a);
        CHECK(std::abs(row) < 1e-14);
    }
}

TEST_CASE("angle_from_three_sides hits the requested branch") {
    const double want = std::acos(1.0 / 3.0);
    CHECK(angle_from_three_sides(kPi / 3, kPi / 3, kPi / 3, AngleBranch::lower) ==
          doctest::Approx(want).epsilon(1e-12));
    CHECK(angle_from_three_sides(kPi / 3, kPi / 3, kPi / 3, AngleBranch::upper) ==
          doctest::Approx(2 * kPi - want).epsilon(1e-12));
}

TEST_CASE("impossible side triples are rejected") {
    CHECK_THROWS_AS(angle_from_three_sides(2.9, 0.1, 0.1, AngleBranch::lower),
                    DegenerateSphericalTriangle);
}
