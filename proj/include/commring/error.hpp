#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace commring {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Io,
  AxiomViolation,
  CommutativeRing,
  NotCcRing,
  NotCommutative,
  UnsupportedTopology,
  CapExceeded,
  SearchSpaceTooLarge,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Axiom {
  TableShape,
  AdditiveIdentity,
  AdditiveClosure,
  AdditiveAssociativity,
  AdditiveCommutativity,
  AdditiveInverse,
  MultiplicativeClosure,
  MultiplicativeAssociativity,
  LeftDistributivity,
  RightDistributivity,
  ZeroAnnihilation,
};

const char* to_string(Axiom axiom);

/// Broad class of an axiom failure, the category reported to callers.
enum class AxiomClass { NotAbelianGroup, MulNotAssociative, NotDistributive };

AxiomClass classify(Axiom axiom);
const char* to_string(AxiomClass cls);

/// First violated ring axiom together with the elements exhibiting it.
/// Unused witness slots are -1.
struct AxiomViolation {
  Axiom axiom;
  std::array<std::int64_t, 3> witness{-1, -1, -1};

  std::string describe() const;
};

class AxiomError : public Error {
 public:
  explicit AxiomError(const AxiomViolation& violation)
      : Error(ErrorCode::AxiomViolation, violation.describe()),
        violation_(violation) {}

  const AxiomViolation& violation() const noexcept { return violation_; }

 private:
  AxiomViolation violation_;
};

}  // namespace commring
