#include "commring/error.hpp"

#include <sstream>

namespace commring {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::Io: return "io-error";
    case ErrorCode::AxiomViolation: return "axiom-violation";
    case ErrorCode::CommutativeRing: return "commutative-ring";
    case ErrorCode::NotCcRing: return "not-cc-ring";
    case ErrorCode::NotCommutative: return "not-commutative";
    case ErrorCode::UnsupportedTopology: return "unsupported-topology";
    case ErrorCode::CapExceeded: return "cap-exceeded";
    case ErrorCode::SearchSpaceTooLarge: return "search-space-too-large";
  }
  return "unknown";
}

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::TableShape: return "table-shape";
    case Axiom::AdditiveIdentity: return "additive-identity";
    case Axiom::AdditiveClosure: return "additive-closure";
    case Axiom::AdditiveAssociativity: return "additive-associativity";
    case Axiom::AdditiveCommutativity: return "additive-commutativity";
    case Axiom::AdditiveInverse: return "additive-inverse";
    case Axiom::MultiplicativeClosure: return "multiplicative-closure";
    case Axiom::MultiplicativeAssociativity: return "multiplicative-associativity";
    case Axiom::LeftDistributivity: return "left-distributivity";
    case Axiom::RightDistributivity: return "right-distributivity";
    case Axiom::ZeroAnnihilation: return "zero-annihilation";
  }
  return "unknown";
}

AxiomClass classify(Axiom axiom) {
  switch (axiom) {
    case Axiom::MultiplicativeClosure:
    case Axiom::MultiplicativeAssociativity:
      return AxiomClass::MulNotAssociative;
    case Axiom::LeftDistributivity:
    case Axiom::RightDistributivity:
    case Axiom::ZeroAnnihilation:
      return AxiomClass::NotDistributive;
    default:
      return AxiomClass::NotAbelianGroup;
  }
}

const char* to_string(AxiomClass cls) {
  switch (cls) {
    case AxiomClass::NotAbelianGroup: return "not-abelian-group";
    case AxiomClass::MulNotAssociative: return "mul-not-associative";
    case AxiomClass::NotDistributive: return "not-distributive";
  }
  return "unknown";
}

std::string AxiomViolation::describe() const {
  std::ostringstream out;
  out << to_string(classify(axiom)) << " (" << to_string(axiom) << ") witness (";
  bool first = true;
  for (auto w : witness) {
    if (w < 0) continue;
    if (!first) out << ",";
    out << w;
    first = false;
  }
  out << ")";
  return out.str();
}

}  // namespace commring
