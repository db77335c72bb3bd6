#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polymoduli/angle_data.hpp"
#include "polymoduli/coloring.hpp"
#include "polymoduli/complex.hpp"
#include "polymoduli/cones.hpp"
#include "polymoduli/tolerances.hpp"

namespace polymoduli {

// A point of the lifted solution space: angle data plus the auxiliary
// variables the constraint systems run over.
struct ModuliPoint {
    SurfaceAngles sigma;
    DihedralAngles delta;
    std::vector<ConeChart> charts;  // one per vertex
    EdgeLengths ell;
};

// Flat-cone rows followed by the stacked per-vertex cone rows.
Eigen::VectorXd g_full(const Combinatoric& K, const ModuliPoint& p);

// The two faces adjacent across the lexicographically smallest edge, as an
// ordered pair.
std::pair<int, int> default_dropped_faces(const Combinatoric& K);

// g_full with the six flat-cone rows of the two dropped faces removed. The
// faces must share an edge (else FacesNotAdjacent).
Eigen::VectorXd g_full_reduced(const Combinatoric& K, const ModuliPoint& p,
                               std::pair<int, int> dropped_faces);

struct Membership {
    bool member = false;
    std::optional<ModuliPoint> point;  // assembled on success
    double max_residual = 0.0;
    std::string detail;  // names the failing block when member is false
};

// Decide whether (sigma, delta) carries a polyhedral structure: propagate
// edge lengths from base_edge, lift every vertex cone, and test the
// assembled residual against tol in max norm. Value-range violations and
// degenerate lifts are reported as non-membership, not errors.
Membership check_membership(const Combinatoric& K, const SurfaceAngles& sigma,
                            const DihedralAngles& delta,
                            double tol = tol::kResidual, int base_edge = 0);

// Symmetric-difference Jacobian of f at x, one column per coordinate.
Eigen::MatrixXd central_difference_jacobian(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x, double step = tol::kFiniteDifferenceStep);

struct NullityReport {
    int nullity = 0;
    int rank = 0;
    // smallest kept singular value over the largest discarded one; infinity
    // when nothing was discarded (kernel fully explained by the shape)
    double gap = 0.0;
    Eigen::VectorXd singular_values;  // descending
};

// Kernel dimension of J: columns minus the number of singular values
// exceeding rel_threshold times the largest one. Throws NonFiniteMatrix.
NullityReport numeric_nullity(const Eigen::MatrixXd& J,
                              double rel_threshold = tol::kNullityRelThreshold);

// Flattened coordinate layout used by all finite-difference Jacobians:
// [ sigma (corner order) | delta (edge order) | per-vertex charts, each as
//   alpha, beta, gamma, c | ell (edge order) ].
struct VariableLayout {
    int sigma_offset = 0, sigma_size = 0;
    int delta_offset = 0, delta_size = 0;
    std::vector<int> chart_offset, chart_size;
    int ell_offset = 0, ell_size = 0;
    int total = 0;
};
VariableLayout variable_layout(const Combinatoric& K);
Eigen::VectorXd pack_point(const Combinatoric& K, const ModuliPoint& p);
// Branch markers are discrete and come from `like`.
ModuliPoint unpack_point(const Combinatoric& K, const Eigen::VectorXd& x,
                         const ModuliPoint& like);

// Jacobians of the individual systems at a solution point, variables as
// documented per function.
Eigen::MatrixXd jacobian_intrinsic(const Combinatoric& K, const EdgeLengths& ell,
                                   const SurfaceAngles& sigma);  // [ell | sigma]
Eigen::MatrixXd jacobian_cone(const ConeAngles& angles,
                              const ConeChart& chart);  // [sigma|delta|a|b|g|c]
Eigen::MatrixXd jacobian_le(const Combinatoric& K, const ModuliPoint& p);
Eigen::MatrixXd jacobian_full(const Combinatoric& K, const ModuliPoint& p);
Eigen::MatrixXd jacobian_full_reduced(const Combinatoric& K, const ModuliPoint& p,
                                      std::pair<int, int> dropped_faces);

struct DimensionCheck {
    std::string name;
    int expected = 0;
    int actual = 0;
    double gap = 0.0;
    bool ok = false;
};

struct DimensionReport {
    int vertex_count = 0, edge_count = 0, face_count = 0, genus = 0;
    std::pair<int, int> dropped_faces{-1, -1};
    bool coloring_found = false;
    DualColoring coloring;
    // when no elimination coloring was found the dimension statements lose
    // their proved backing; the numbers are still reported
    bool conditional = false;
    double scale_derivative = 0.0;
    std::vector<DimensionCheck> checks;

    bool all_ok() const;
};

// Compare numerical kernel dimensions against the dimension formulas: E for
// the flat-cone system, 2n-3 per vertex cone, 2E+6g-6 for the assembled cone
// system, and on genus 0 both the reduced and unreduced full systems against
// E plus the quotient count E-1. Also measures the derivative along the
// direction scaling all edge lengths, and records an elimination-pattern
// coloring witness for the dropped-face pair. Requires g_full(p) within
// tol::kResidual (else NotASolution).
DimensionReport verify_dimensions(const Combinatoric& K, const ModuliPoint& p,
                                  std::optional<std::pair<int, int>> dropped = {});

std::string format_dimension_report(const DimensionReport& report);

}  // namespace polymoduli
