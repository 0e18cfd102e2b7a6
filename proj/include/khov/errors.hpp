#pragma once

#include <stdexcept>
#include <string>

namespace khov {

enum class Errc {
  MalformedSyntax,
  ArcCountMismatch,
  NonPlanarInconsistency,
  UnbalancedCode,
  SiteNotFound,
  PatternMismatch,
  CoordinateAlreadyOne,
  IndexOutOfRange,
  EqualIndices,
  NotAnEdge,
  FaceNotProportional,
  Unsolvable,
  UnknownSymbol,
  BasisExpressionFailure,
  DimensionMismatch,
  TooLarge,
  NotAComplex,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace khov
