#include "polymoduli/cones.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polymoduli/errors.hpp"

namespace polymoduli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

AngleBranch branch_of(double angle, const char* what) {
    if (angle > 0.0 && angle < kPi) return AngleBranch::lower;
    if (angle > kPi && angle < kTwoPi) return AngleBranch::upper;
    throw DegenerateCone(std::string(what) + " = " + std::to_string(angle) +
                         " is not in (0,pi) or (pi,2pi)");
}

void require_cone_ranges(const ConeAngles& angles) {
    for (double s : angles.sigma)
        if (!(s > 0.0 && s < kPi))
            throw DegenerateCone("face angle " + std::to_string(s) +
                                 " outside (0,pi)");
    for (double d : angles.delta)
        if (!(d > 0.0 && d < kTwoPi))
            throw DegenerateCone("dihedral angle " + std::to_string(d) +
                                 " outside (0,2pi)");
}

}  // namespace

int ConeAngles::valency() const {
    if (sigma.size() != delta.size())
        throw SizeMismatch("cone has " + std::to_string(sigma.size()) +
                           " face angles but " + std::to_string(delta.size()) +
                           " dihedral angles");
    if (sigma.size() < 3)
        throw SizeMismatch("cone valency " + std::to_string(sigma.size()) +
                           " below 3");
    return static_cast<int>(sigma.size());
}

Eigen::VectorXd g_n(const ConeAngles& angles, const ConeChart& chart) {
    const int n = angles.valency();
    const size_t nt = static_cast<size_t>(n - 2);
    if (chart.alpha.size() != nt || chart.beta.size() != nt ||
        chart.gamma.size() != nt || chart.branch.size() != nt ||
        chart.c.size() != static_cast<size_t>(n - 3))
        throw SizeMismatch("chart does not fit a valency-" + std::to_string(n) +
                           " cone");

    Eigen::VectorXd r(3 * (n - 2) + n);
    for (int m = 1; m <= n - 2; ++m) {
        SphericalTriangle t;
        t.a = angles.sigma[m];
        t.b = m == 1 ? angles.sigma[0] : chart.c[m - 2];
        t.c = m == n - 2 ? angles.sigma[n - 1] : chart.c[m - 1];
        t.alpha = chart.alpha[m - 1];
        t.beta = chart.beta[m - 1];
        t.gamma = chart.gamma[m - 1];
        t.branch = chart.branch[m - 1];
        r.segment<3>(3 * (m - 1)) = g_three(t);
    }
    const int base = 3 * (n - 2);
    double alpha_sum = 0.0;
    for (double a : chart.alpha) alpha_sum += a;
    r(base) = angles.delta[0] - alpha_sum;
    r(base + 1) = angles.delta[1] - chart.gamma[0];
    for (int j = 3; j <= n - 1; ++j)
        r(base + j - 1) = angles.delta[j - 1] - chart.beta[j - 3] - chart.gamma[j - 2];
    r(base + n - 1) = angles.delta[n - 1] - chart.beta[n - 3];
    return r;
}

ConeChart lift_cone(const ConeAngles& angles) {
    const int n = angles.valency();
    require_cone_ranges(angles);

    ConeChart chart;
    chart.alpha.reserve(n - 2);
    chart.beta.reserve(n - 2);
    chart.gamma.reserve(n - 2);
    chart.c.reserve(n - 3);
    chart.branch.reserve(n - 2);

    auto recover = [](auto&& op, const char* what) -> double {
        try {
            return op();
        } catch (const DegenerateSphericalTriangle& e) {
            throw DegenerateCone(std::string(what) + ": " + e.what());
        }
    };

    double gamma_m = angles.delta[1];
    AngleBranch br = branch_of(gamma_m, "polygon angle at A_2");
    // side of triangle m opposite gamma_m; for the last triangle it is given
    double b_side = angles.sigma[0];
    for (int m = 1; m <= n - 2; ++m) {
        if (m > 1) {
            gamma_m = angles.delta[m] - chart.beta[m - 2];
            br = branch_of(gamma_m, "split polygon angle");
        }
        const double a_side = angles.sigma[m];
        const double b = b_side;
        double c_side;
        if (m == n - 2) {
            c_side = angles.sigma[n - 1];
        } else {
            c_side = recover(
                [&] { return side_from_two_sides_and_angle(b, a_side, gamma_m); },
                "diagonal");
            chart.c.push_back(c_side);
        }
        chart.gamma.push_back(gamma_m);
        chart.branch.push_back(br);
        chart.alpha.push_back(recover(
            [&] { return angle_from_three_sides(a_side, b, c_side, br); },
            "fan angle at A_1"));
        chart.beta.push_back(recover(
            [&] { return angle_from_three_sides(b, a_side, c_side, br); },
            "fan angle at the far vertex"));
        b_side = c_side;
    }
    return chart;
}

bool check_cone_membership(const ConeAngles& angles, double tol) {
    try {
        ConeChart chart = lift_cone(angles);
        return g_n(angles, chart).cwiseAbs().maxCoeff() <= tol;
    } catch (const DegenerateCone&) {
        return false;
    } catch (const SizeMismatch&) {
        return false;
    }
}

std::vector<Eigen::Vector3d> realize_cone(const ConeAngles& angles,
                                          const ConeChart& chart) {
    const int n = angles.valency();
    const double residual = g_n(angles, chart).cwiseAbs().maxCoeff();
    if (!(residual <= tol::kResidual))
        throw NotASolution("cone residual " + std::to_string(residual) +
                           " exceeds " + std::to_string(tol::kResidual));

    std::vector<Eigen::Vector3d> u(n);
    auto place = [](double colat, double lon) {
        return Eigen::Vector3d(std::sin(colat) * std::cos(lon),
                               std::sin(colat) * std::sin(lon), std::cos(colat));
    };
    u[0] = Eigen::Vector3d(0, 0, 1);
    u[1] = place(angles.sigma[0], 0.0);
    double lon = 0.0;
    for (int i = 3; i <= n; ++i) {
        lon -= chart.alpha[i - 3];
        const double colat = i == n ? angles.sigma[n - 1] : chart.c[i - 3];
        u[i - 1] = place(colat, lon);
    }

    for (int i = 0; i < n; ++i) {
        Eigen::Matrix3d m;
        m.col(0) = u[i];
        m.col(1) = u[(i + 1) % n];
        m.col(2) = u[(i + 2) % n];
        if (std::abs(m.determinant()) <= tol::kGeneralPosition)
            throw NotInGeneralPosition("cone edges " + std::to_string(i + 1) +
                                       ".." + std::to_string(i + 3) +
                                       " are nearly coplanar");
    }
    return u;
}

double dihedral_angle(const Eigen::Vector3d& axis, const Eigen::Vector3d& first_side,
                      const Eigen::Vector3d& second_side) {
    const Eigen::Vector3d e = axis.normalized();
    const Eigen::Vector3d w1 = first_side - first_side.dot(e) * e;
    const Eigen::Vector3d w2 = second_side - second_side.dot(e) * e;
    if (w1.norm() <= 1e-14 * first_side.norm() ||
        w2.norm() <= 1e-14 * second_side.norm())
        throw DegenerateFace("a face side is parallel to the edge axis");
    const double y = e.dot(w2.cross(w1));
    const double x = w1.dot(w2);
    double angle = std::atan2(y, x);
    if (angle <= 0.0) angle += kTwoPi;
    if (std::min(angle, kTwoPi - angle) <= tol::kFlatEdge)
        throw ZeroDihedral("half-planes around the edge coincide");
    return angle;
}

ConeAngles extract_cone_angles(const std::vector<Eigen::Vector3d>& rays) {
    const int n = static_cast<int>(rays.size());
    if (n < 3) throw SizeMismatch("a cone needs at least 3 edge rays");
    std::vector<Eigen::Vector3d> u(n);
    for (int i = 0; i < n; ++i) {
        if (rays[i].norm() <= 0.0) throw DegenerateCone("zero edge ray");
        u[i] = rays[i].normalized();
    }
    ConeAngles angles;
    angles.sigma.resize(n);
    angles.delta.resize(n);
    for (int i = 0; i < n; ++i) {
        const double d = std::clamp(u[i].dot(u[(i + 1) % n]), -1.0, 1.0);
        const double s = std::acos(d);
        if (s <= 0.0 || s >= kPi - 1e-15)
            throw DegenerateCone("consecutive edge rays are parallel");
        angles.sigma[i] = s;
    }
    for (int i = 0; i < n; ++i)
        angles.delta[i] = dihedral_angle(u[i], u[(i + 1) % n], u[(i + n - 1) % n]);
    return angles;
}

ConeAngles cone_angles_at_vertex(const Combinatoric& K, const SurfaceAngles& sigma,
                                 const DihedralAngles& delta, int k) {
    const auto& link = K.vertex_link(k);
    const auto& around = K.faces_around(k);
    const int n = static_cast<int>(link.size());
    ConeAngles angles;
    angles.sigma.resize(n);
    angles.delta.resize(n);
    for (int i = 0; i < n; ++i) {
        angles.sigma[i] = sigma.sigma[K.corner_index(around[i], k)];
        angles.delta[i] = delta.delta[K.edge_index(k, link[i])];
    }
    return angles;
}

Eigen::VectorXd g_le(const Combinatoric& K, const SurfaceAngles& sigma,
                     const DihedralAngles& delta,
                     const std::vector<ConeChart>& charts) {
    if (static_cast<int>(charts.size()) != K.vertex_count())
        throw MissingChart("expected " + std::to_string(K.vertex_count()) +
                           " cone charts, got " + std::to_string(charts.size()));
    int rows = 0;
    for (int k = 0; k < K.vertex_count(); ++k)
        rows += 4 * K.valency(k) - 6;
    Eigen::VectorXd r(rows);
    int at = 0;
    for (int k = 0; k < K.vertex_count(); ++k) {
        Eigen::VectorXd rk =
            g_n(cone_angles_at_vertex(K, sigma, delta, k), charts[k]);
        r.segment(at, rk.size()) = rk;
        at += static_cast<int>(rk.size());
    }
    return r;
}

}  // namespace polymoduli
