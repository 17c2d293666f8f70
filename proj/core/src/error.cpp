#include "symq/error.hpp"

namespace symq {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::CyclicQuiver: return "CyclicQuiver";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::NotContravariant: return "NotContravariant";
    case ErrorCode::PartitionViolation: return "PartitionViolation";
    case ErrorCode::QuiverMismatch: return "QuiverMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::IndexOutOfOrbit: return "IndexOutOfOrbit";
    case ErrorCode::AsymmetricDimension: return "AsymmetricDimension";
    case ErrorCode::OddSymplecticDimension: return "OddSymplecticDimension";
    case ErrorCode::AsymmetricWeight: return "AsymmetricWeight";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::NotEuclidean: return "NotEuclidean";
    case ErrorCode::UnsupportedSymmetricType: return "UnsupportedSymmetricType";
    case ErrorCode::UnsupportedQuiver: return "UnsupportedQuiver";
    case ErrorCode::NotFiniteType: return "NotFiniteType";
    case ErrorCode::NotTame: return "NotTame";
    case ErrorCode::NotSinkOrSource: return "NotSinkOrSource";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NonzeroOnFixedVertex: return "NonzeroOnFixedVertex";
    case ErrorCode::NonOrthogonalDimensions: return "NonOrthogonalDimensions";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::PatternNotFound: return "PatternNotFound";
    case ErrorCode::Singular: return "Singular";
  }
  return "Unknown";
}

ErrorClass error_class(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotEuclidean:
    case ErrorCode::UnsupportedSymmetricType:
    case ErrorCode::UnsupportedQuiver:
    case ErrorCode::NotFiniteType:
    case ErrorCode::NotTame:
      return ErrorClass::Unsupported;
    case ErrorCode::NotSinkOrSource:
    case ErrorCode::NotAdmissible:
    case ErrorCode::NonzeroOnFixedVertex:
    case ErrorCode::NonOrthogonalDimensions:
    case ErrorCode::NotRegular:
    case ErrorCode::NotCanonical:
    case ErrorCode::PatternNotFound:
    case ErrorCode::Singular:
      return ErrorClass::Precondition;
    default:
      return ErrorClass::Validation;
  }
}

}  // namespace symq
