#pragma once

#include <stdexcept>
#include <string>

namespace polymoduli {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define POLYMODULI_DEFINE_ERROR(Name)                                          \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(std::string(#Name) + ": " + what) {} \
    }

// complex
POLYMODULI_DEFINE_ERROR(InvalidComplex);
POLYMODULI_DEFINE_ERROR(NonManifoldEdge);
POLYMODULI_DEFINE_ERROR(InconsistentOrientation);
POLYMODULI_DEFINE_ERROR(DisconnectedComplex);
POLYMODULI_DEFINE_ERROR(PinchedVertex);
POLYMODULI_DEFINE_ERROR(GenusNotZero);
POLYMODULI_DEFINE_ERROR(SearchExhausted);

// coloring
POLYMODULI_DEFINE_ERROR(ForeignSimplex);
POLYMODULI_DEFINE_ERROR(ArgumentMismatch);

// euclid / sphere
POLYMODULI_DEFINE_ERROR(DegenerateTriangle);
POLYMODULI_DEFINE_ERROR(DegenerateSphericalTriangle);

// cones
POLYMODULI_DEFINE_ERROR(DegenerateCone);
POLYMODULI_DEFINE_ERROR(SizeMismatch);
POLYMODULI_DEFINE_ERROR(NotInGeneralPosition);
POLYMODULI_DEFINE_ERROR(MissingChart);

// intrinsic / moduli
POLYMODULI_DEFINE_ERROR(MissingEntry);
POLYMODULI_DEFINE_ERROR(FacesNotAdjacent);
POLYMODULI_DEFINE_ERROR(NonFiniteMatrix);
POLYMODULI_DEFINE_ERROR(NotASolution);

// build
POLYMODULI_DEFINE_ERROR(DegenerateFace);
POLYMODULI_DEFINE_ERROR(ZeroDihedral);
POLYMODULI_DEFINE_ERROR(NotAMember);
POLYMODULI_DEFINE_ERROR(ClosureFailure);
POLYMODULI_DEFINE_ERROR(NotCongruent);
POLYMODULI_DEFINE_ERROR(Collinear);
POLYMODULI_DEFINE_ERROR(CombinatoricMismatch);

// io
POLYMODULI_DEFINE_ERROR(ParseError);

#undef POLYMODULI_DEFINE_ERROR

}  // namespace polymoduli
