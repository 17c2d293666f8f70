#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symq {

enum class ErrorCode {
  // validation
  ParseError,
  InvalidArgument,
  NotSquare,
  NotSkewSymmetric,
  OddDimension,
  CyclicQuiver,
  DomainMismatch,
  NotInvolutive,
  NotContravariant,
  PartitionViolation,
  QuiverMismatch,
  ShapeMismatch,
  BadInterval,
  IndexOutOfOrbit,
  AsymmetricDimension,
  OddSymplecticDimension,
  AsymmetricWeight,
  NotSymmetric,
  ParityViolation,
  // unsupported
  NotEuclidean,
  UnsupportedSymmetricType,
  UnsupportedQuiver,
  NotFiniteType,
  NotTame,
  // precondition
  NotSinkOrSource,
  NotAdmissible,
  NonzeroOnFixedVertex,
  NonOrthogonalDimensions,
  NotRegular,
  NotCanonical,
  PatternNotFound,
  Singular,
};

std::string_view error_name(ErrorCode code);

enum class ErrorClass { Validation, Unsupported, Precondition };
ErrorClass error_class(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace symq
