#pragma once

namespace polymoduli::tol {

// Default residual tolerance for all membership decisions.
inline constexpr double kResidual = 1e-9;

// Arguments of arccos may drift past [-1, 1] by this much before the
// configuration is treated as degenerate.
inline constexpr double kArccosClamp = 1e-12;

// Step for central finite differences when assembling large Jacobians.
inline constexpr double kFiniteDifferenceStep = 1e-6;

// Singular values below kNullityRelThreshold * sigma_max count as zero.
inline constexpr double kNullityRelThreshold = 1e-7;

// Shape comparison threshold, scaled by the diameter of the target.
inline constexpr double kSimilarity = 1e-6;

// Closure checks during reconstruction run at this multiple of the
// membership tolerance.
inline constexpr double kClosureFactor = 100.0;

// |det| of three consecutive unit cone edges must exceed this.
inline constexpr double kGeneralPosition = 1e-10;

// Point triples are congruent when paired distances agree within this.
inline constexpr double kCongruence = 1e-9;

// Dihedral angles within this distance of pi are flagged as flat.
inline constexpr double kFlatEdge = 1e-9;

// A face is degenerate when its area is at most this times its squared
// diameter.
inline constexpr double kFaceArea = 1e-12;

}  // namespace polymoduli::tol
