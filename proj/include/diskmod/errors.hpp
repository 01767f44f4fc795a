#pragma once

#include <stdexcept>
#include <string>

namespace diskmod {

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroOnGrid : DomainError {
  explicit ZeroOnGrid(const std::string& what) : DomainError(what) {}
};

struct RadiusOutOfDomain : DomainError {
  explicit RadiusOutOfDomain(const std::string& what) : DomainError(what) {}
};

struct BoundaryEvaluation : DomainError {
  explicit BoundaryEvaluation(const std::string& what) : DomainError(what) {}
};

struct AllZero : DomainError {
  explicit AllZero(const std::string& what) : DomainError(what) {}
};

struct NotStrictlyPositive : DomainError {
  explicit NotStrictlyPositive(const std::string& what) : DomainError(what) {}
};

struct Inconclusive : DomainError {
  explicit Inconclusive(const std::string& what) : DomainError(what) {}
};

struct TruncationFailure : DomainError {
  explicit TruncationFailure(const std::string& what) : DomainError(what) {}
};

struct NotLogIntegrable : DomainError {
  explicit NotLogIntegrable(const std::string& what) : DomainError(what) {}
};

struct SmoothingFailure : DomainError {
  explicit SmoothingFailure(const std::string& what) : DomainError(what) {}
};

struct NotInSubalgebra : DomainError {
  explicit NotInSubalgebra(const std::string& what) : DomainError(what) {}
};

struct NotInvertible : DomainError {
  explicit NotInvertible(const std::string& what) : DomainError(what) {}
};

struct SamePart : DomainError {
  explicit SamePart(const std::string& what) : DomainError(what) {}
};

struct ConstructionFailure : DomainError {
  explicit ConstructionFailure(const std::string& what) : DomainError(what) {}
};

struct InvalidCertificate : DomainError {
  explicit InvalidCertificate(const std::string& what) : DomainError(what) {}
};

struct InvalidInput : DomainError {
  explicit InvalidInput(const std::string& what) : DomainError(what) {}
};

}  // namespace diskmod
