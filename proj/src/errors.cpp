#include "khov/errors.hpp"

namespace khov {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::MalformedSyntax: return "MalformedSyntax";
    case Errc::ArcCountMismatch: return "ArcCountMismatch";
    case Errc::NonPlanarInconsistency: return "NonPlanarInconsistency";
    case Errc::UnbalancedCode: return "UnbalancedCode";
    case Errc::SiteNotFound: return "SiteNotFound";
    case Errc::PatternMismatch: return "PatternMismatch";
    case Errc::CoordinateAlreadyOne: return "CoordinateAlreadyOne";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::EqualIndices: return "EqualIndices";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::FaceNotProportional: return "FaceNotProportional";
    case Errc::Unsolvable: return "Unsolvable";
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::BasisExpressionFailure: return "BasisExpressionFailure";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotAComplex: return "NotAComplex";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace khov
