#include "polymoduli/moduli.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "polymoduli/errors.hpp"
#include "polymoduli/intrinsic.hpp"

namespace polymoduli {

namespace {

constexpr double kPi = std::numbers::pi;

// Human-readable name for a residual row of g_full, used in membership
// diagnostics.
std::string row_label(const Combinatoric& K, int row) {
    if (row < 3 * K.face_count()) {
        const auto& f = K.faces()[row / 3];
        return "face (" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," +
               std::to_string(f[2]) + ") row " + std::to_string(row % 3);
    }
    int at = row - 3 * K.face_count();
    for (int k = 0; k < K.vertex_count(); ++k) {
        const int n = K.valency(k);
        const int block = 4 * n - 6;
        if (at < block) {
            if (at < 3 * (n - 2))
                return "cone at vertex " + std::to_string(k) + " triangle " +
                       std::to_string(at / 3 + 1) + " row " + std::to_string(at % 3);
            return "cone at vertex " + std::to_string(k) + " assembly row " +
                   std::to_string(at - 3 * (n - 2) + 1);
        }
        at -= block;
    }
    return "row " + std::to_string(row);
}

}  // namespace

Eigen::VectorXd g_full(const Combinatoric& K, const ModuliPoint& p) {
    Eigen::VectorXd in = g_in(K, p.ell, p.sigma);
    Eigen::VectorXd le = g_le(K, p.sigma, p.delta, p.charts);
    Eigen::VectorXd r(in.size() + le.size());
    r << in, le;
    return r;
}

std::pair<int, int> default_dropped_faces(const Combinatoric& K) {
    const auto& faces = K.edge_faces(0);
    return {std::min(faces[0], faces[1]), std::max(faces[0], faces[1])};
}

Eigen::VectorXd g_full_reduced(const Combinatoric& K, const ModuliPoint& p,
                               std::pair<int, int> dropped_faces) {
    const auto [f1, f2] = dropped_faces;
    if (f1 < 0 || f2 < 0 || f1 >= K.face_count() || f2 >= K.face_count() || f1 == f2)
        throw FacesNotAdjacent("invalid face pair " + std::to_string(f1) + ", " +
                               std::to_string(f2));
    bool share = false;
    for (int e : K.face_edges(f1))
        for (int g : K.face_edges(f2))
            if (e == g) share = true;
    if (!share)
        throw FacesNotAdjacent("faces " + std::to_string(f1) + " and " +
                               std::to_string(f2) + " share no edge");

    Eigen::VectorXd full = g_full(K, p);
    Eigen::VectorXd r(full.size() - 6);
    int at = 0;
    for (int row = 0; row < full.size(); ++row) {
        const int face = row / 3;
        if (row < 3 * K.face_count() && (face == f1 || face == f2)) continue;
        r(at++) = full(row);
    }
    return r;
}

Membership check_membership(const Combinatoric& K, const SurfaceAngles& sigma,
                            const DihedralAngles& delta, double tol, int base_edge) {
    if (static_cast<int>(sigma.sigma.size()) != 3 * K.face_count())
        throw SizeMismatch("corner angle vector has wrong size");
    if (static_cast<int>(delta.delta.size()) != K.edge_count())
        throw SizeMismatch("dihedral angle vector has wrong size");

    Membership result;
    for (double s : sigma.sigma)
        if (!(s > 0.0 && s < kPi)) {
            result.detail = "a face angle lies outside (0,pi)";
            return result;
        }
    for (double d : delta.delta)
        if (!(d > 0.0 && d < 2.0 * kPi)) {
            result.detail = "a dihedral angle lies outside (0,2pi)";
            return result;
        }

    IntrinsicMembership intrinsic = check_in_membership(K, sigma, tol, base_edge);
    if (!intrinsic.member) {
        result.max_residual = intrinsic.max_residual;
        result.detail = "flat-cone equations fail, max residual " +
                        std::to_string(intrinsic.max_residual);
        return result;
    }

    ModuliPoint point;
    point.sigma = sigma;
    point.delta = delta;
    point.ell = intrinsic.ell;
    point.charts.reserve(K.vertex_count());
    for (int k = 0; k < K.vertex_count(); ++k) {
        try {
            point.charts.push_back(lift_cone(cone_angles_at_vertex(K, sigma, delta, k)));
        } catch (const DegenerateCone& e) {
            result.detail = "cone at vertex " + std::to_string(k) +
                            " has no chart: " + e.what();
            return result;
        }
    }

    Eigen::VectorXd residual = g_full(K, point);
    int worst = 0;
    result.max_residual = residual.cwiseAbs().maxCoeff(&worst);
    if (result.max_residual <= tol) {
        result.member = true;
        result.point = std::move(point);
    } else {
        result.detail = "residual " + std::to_string(result.max_residual) +
                        " at " + row_label(K, worst);
    }
    return result;
}

Eigen::MatrixXd central_difference_jacobian(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x, double step) {
    const int cols = static_cast<int>(x.size());
    Eigen::MatrixXd J;
    for (int j = 0; j < cols; ++j) {
        Eigen::VectorXd hi = x, lo = x;
        hi(j) += step;
        lo(j) -= step;
        Eigen::VectorXd column = (f(hi) - f(lo)) / (2.0 * step);
        if (J.size() == 0) J.resize(column.size(), cols);
        J.col(j) = column;
    }
    return J;
}

NullityReport numeric_nullity(const Eigen::MatrixXd& J, double rel_threshold) {
    if (!J.allFinite()) throw NonFiniteMatrix("Jacobian has non-finite entries");
    NullityReport report;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(J);
    report.singular_values = svd.singularValues();
    const double largest =
        report.singular_values.size() > 0 ? report.singular_values(0) : 0.0;
    const double threshold = rel_threshold * largest;
    int rank = 0;
    for (int i = 0; i < report.singular_values.size(); ++i)
        if (report.singular_values(i) > threshold) ++rank;
    report.rank = rank;
    report.nullity = static_cast<int>(J.cols()) - rank;
    if (rank > 0 && rank < report.singular_values.size())
        report.gap = report.singular_values(rank - 1) / report.singular_values(rank);
    else
        report.gap = std::numeric_limits<double>::infinity();
    return report;
}

VariableLayout variable_layout(const Combinatoric& K) {
    VariableLayout L;
    L.sigma_offset = 0;
    L.sigma_size = 3 * K.face_count();
    L.delta_offset = L.sigma_size;
    L.delta_size = K.edge_count();
    int at = L.delta_offset + L.delta_size;
    for (int k = 0; k < K.vertex_count(); ++k) {
        const int n = K.valency(k);
        L.chart_offset.push_back(at);
        L.chart_size.push_back(3 * (n - 2) + (n - 3));
        at += L.chart_size.back();
    }
    L.ell_offset = at;
    L.ell_size = K.edge_count();
    L.total = at + L.ell_size;
    return L;
}

Eigen::VectorXd pack_point(const Combinatoric& K, const ModuliPoint& p) {
    const VariableLayout L = variable_layout(K);
    Eigen::VectorXd x(L.total);
    for (int i = 0; i < L.sigma_size; ++i) x(i) = p.sigma.sigma[i];
    for (int i = 0; i < L.delta_size; ++i) x(L.delta_offset + i) = p.delta.delta[i];
    for (int k = 0; k < K.vertex_count(); ++k) {
        const ConeChart& chart = p.charts[k];
        int at = L.chart_offset[k];
        for (double v : chart.alpha) x(at++) = v;
        for (double v : chart.beta) x(at++) = v;
        for (double v : chart.gamma) x(at++) = v;
        for (double v : chart.c) x(at++) = v;
    }
    for (int i = 0; i < L.ell_size; ++i) x(L.ell_offset + i) = p.ell.ell[i];
    return x;
}

ModuliPoint unpack_point(const Combinatoric& K, const Eigen::VectorXd& x,
                         const ModuliPoint& like) {
    const VariableLayout L = variable_layout(K);
    if (x.size() != L.total)
        throw SizeMismatch("packed vector has size " + std::to_string(x.size()) +
                           ", layout needs " + std::to_string(L.total));
    ModuliPoint p;
    p.sigma.sigma.assign(x.data(), x.data() + L.sigma_size);
    p.delta.delta.assign(x.data() + L.delta_offset,
                         x.data() + L.delta_offset + L.delta_size);
    p.charts.resize(K.vertex_count());
    for (int k = 0; k < K.vertex_count(); ++k) {
        const int n = K.valency(k);
        int at = L.chart_offset[k];
        ConeChart& chart = p.charts[k];
        chart.alpha.assign(x.data() + at, x.data() + at + (n - 2));
        at += n - 2;
        chart.beta.assign(x.data() + at, x.data() + at + (n - 2));
        at += n - 2;
        chart.gamma.assign(x.data() + at, x.data() + at + (n - 2));
        at += n - 2;
        chart.c.assign(x.data() + at, x.data() + at + (n - 3));
        chart.branch = like.charts[k].branch;
    }
    p.ell.ell.assign(x.data() + L.ell_offset, x.data() + L.ell_offset + L.ell_size);
    return p;
}

Eigen::MatrixXd jacobian_intrinsic(const Combinatoric& K, const EdgeLengths& ell,
                                   const SurfaceAngles& sigma) {
    const int E = K.edge_count();
    Eigen::VectorXd x(E + 3 * K.face_count());
    for (int i = 0; i < E; ++i) x(i) = ell.ell[i];
    for (size_t i = 0; i < sigma.sigma.size(); ++i) x(E + i) = sigma.sigma[i];
    auto f = [&](const Eigen::VectorXd& v) {
        EdgeLengths l;
        l.ell.assign(v.data(), v.data() + E);
        SurfaceAngles s;
        s.sigma.assign(v.data() + E, v.data() + v.size());
        return g_in(K, l, s);
    };
    return central_difference_jacobian(f, x);
}

Eigen::MatrixXd jacobian_cone(const ConeAngles& angles, const ConeChart& chart) {
    const int n = angles.valency();
    Eigen::VectorXd x(2 * n + 3 * (n - 2) + (n - 3));
    int at = 0;
    for (double v : angles.sigma) x(at++) = v;
    for (double v : angles.delta) x(at++) = v;
    for (double v : chart.alpha) x(at++) = v;
    for (double v : chart.beta) x(at++) = v;
    for (double v : chart.gamma) x(at++) = v;
    for (double v : chart.c) x(at++) = v;
    auto f = [&](const Eigen::VectorXd& v) {
        ConeAngles a;
        ConeChart ch;
        int i = 0;
        a.sigma.assign(v.data(), v.data() + n);
        i = n;
        a.delta.assign(v.data() + i, v.data() + i + n);
        i += n;
        ch.alpha.assign(v.data() + i, v.data() + i + (n - 2));
        i += n - 2;
        ch.beta.assign(v.data() + i, v.data() + i + (n - 2));
        i += n - 2;
        ch.gamma.assign(v.data() + i, v.data() + i + (n - 2));
        i += n - 2;
        ch.c.assign(v.data() + i, v.data() + i + (n - 3));
        ch.branch = chart.branch;
        return g_n(a, ch);
    };
    return central_difference_jacobian(f, x);
}

namespace {

Eigen::MatrixXd jacobian_over_layout(
    const Combinatoric& K, const ModuliPoint& p, bool include_ell,
    const std::function<Eigen::VectorXd(const ModuliPoint&)>& system) {
    const VariableLayout L = variable_layout(K);
    Eigen::VectorXd x = pack_point(K, p);
    const int cols = include_ell ? L.total : L.ell_offset;
    auto f = [&](const Eigen::VectorXd& v) {
        Eigen::VectorXd w = x;
        w.head(v.size()) = v;
        return system(unpack_point(K, w, p));
    };
    return central_difference_jacobian(f, x.head(cols));
}

}  // namespace

Eigen::MatrixXd jacobian_le(const Combinatoric& K, const ModuliPoint& p) {
    return jacobian_over_layout(K, p, false, [&](const ModuliPoint& q) {
        return g_le(K, q.sigma, q.delta, q.charts);
    });
}

Eigen::MatrixXd jacobian_full(const Combinatoric& K, const ModuliPoint& p) {
    return jacobian_over_layout(
        K, p, true, [&](const ModuliPoint& q) { return g_full(K, q); });
}

Eigen::MatrixXd jacobian_full_reduced(const Combinatoric& K, const ModuliPoint& p,
                                      std::pair<int, int> dropped_faces) {
    return jacobian_over_layout(K, p, true, [&](const ModuliPoint& q) {
        return g_full_reduced(K, q, dropped_faces);
    });
}

bool DimensionReport::all_ok() const {
    for (const DimensionCheck& c : checks)
        if (!c.ok) return false;
    return true;
}

DimensionReport verify_dimensions(const Combinatoric& K, const ModuliPoint& p,
                                  std::optional<std::pair<int, int>> dropped) {
    const double residual = g_full(K, p).cwiseAbs().maxCoeff();
    if (!(residual <= tol::kResidual))
        throw NotASolution("residual " + std::to_string(residual) +
                           " exceeds " + std::to_string(tol::kResidual));

    DimensionReport report;
    report.vertex_count = K.vertex_count();
    report.edge_count = K.edge_count();
    report.face_count = K.face_count();
    report.genus = K.genus();
    report.dropped_faces = dropped ? *dropped : default_dropped_faces(K);

    const DualGraph dual = dual_graph(K);
    ColoringResult coloring =
        K.genus() == 0
            ? find_epc_coloring(dual, 0, report.dropped_faces)
            : find_epc_coloring(dual, K.genus());
    report.coloring_found = coloring.found && is_admissible(dual, coloring.coloring);
    report.coloring = coloring.coloring;
    report.conditional = !report.coloring_found;

    const int E = K.edge_count();
    auto add = [&](const std::string& name, int expected, const NullityReport& n) {
        report.checks.push_back(
            {name, expected, n.nullity, n.gap, n.nullity == expected});
    };

    add("intrinsic", E, numeric_nullity(jacobian_intrinsic(K, p.ell, p.sigma)));
    for (int k = 0; k < K.vertex_count(); ++k) {
        const int n = K.valency(k);
        add("cone " + std::to_string(k), 2 * n - 3,
            numeric_nullity(jacobian_cone(
                cone_angles_at_vertex(K, p.sigma, p.delta, k), p.charts[k])));
    }
    add("cone-assembly", 2 * E + 6 * K.genus() - 6, numeric_nullity(jacobian_le(K, p)));

    Eigen::MatrixXd J_full = jacobian_full(K, p);
    if (K.genus() == 0) {
        NullityReport reduced =
            numeric_nullity(jacobian_full_reduced(K, p, report.dropped_faces));
        add("full-reduced", E, reduced);
        add("full-unreduced", E, numeric_nullity(J_full));
        report.checks.push_back({"moduli", E - 1, reduced.nullity - 1, reduced.gap,
                                 reduced.nullity - 1 == E - 1});
    }

    // derivative of the full system along the direction scaling every edge
    // length and fixing all angles
    const VariableLayout L = variable_layout(K);
    Eigen::VectorXd direction = Eigen::VectorXd::Zero(L.total);
    for (int i = 0; i < L.ell_size; ++i)
        direction(L.ell_offset + i) = p.ell.ell[i];
    direction.normalize();
    report.scale_derivative = (J_full * direction).cwiseAbs().maxCoeff();

    return report;
}

std::string format_dimension_report(const DimensionReport& r) {
    std::ostringstream out;
    out << "dimension-report V " << r.vertex_count << " E " << r.edge_count
        << " F " << r.face_count << " genus " << r.genus << "\n";
    if (r.coloring_found) {
        out << "coloring found pair " << r.dropped_faces.first << " "
            << r.dropped_faces.second << " arrows " << r.coloring.arrows.size()
            << " corners " << r.coloring.corners.size() << "\n";
    } else {
        out << "coloring not-found (checks reported without elimination witness)\n";
    }
    for (const DimensionCheck& c : r.checks) {
        out << "check " << c.name << " expected " << c.expected << " actual "
            << c.actual << " gap ";
        if (std::isinf(c.gap))
            out << "inf";
        else
            out << c.gap;
        out << " status " << (c.ok ? "ok" : "MISMATCH") << "\n";
    }
    out << "check scale-direction expected <1e-06 actual " << r.scale_derivative
        << " status " << (r.scale_derivative < 1e-6 ? "ok" : "MISMATCH") << "\n";
    return out.str();
}

}  // namespace polymoduli
