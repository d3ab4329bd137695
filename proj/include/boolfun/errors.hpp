#pragma once

#include <stdexcept>
#include <string>

namespace boolfun {

enum class Errc {
  WrongLength,
  NonzeroEmptySet,
  SubsetOutOfRange,
  Overflow,
  EqualParameters,
  GroundSetTooLarge,
  MismatchedGroundSets,
  NotARefinement,
  EmptyGroundSet,
  EnumerationTooLarge,
  NotAMatroid,
  NotABasis,
  NotInBoolMax,
  EmptyVertexSet,
  InvalidArgument,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  Errc code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace boolfun
