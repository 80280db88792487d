#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

// Every failure the library can signal, so callers (and the CLI) can map
// errors to behavior without string matching.
enum class Errc {
  ring_mismatch,        // operands belong to different rings
  spec_mismatch,        // operands belong to different algebras
  rank_mismatch,        // vector/matrix dimension disagrees with the form or map
  not_a_unit,           // inverse requested for a non-unit ring element
  not_invertible,       // inverse requested for a singular matrix / algebra element
  infinite_ring,        // enumeration requested over Z or Q
  not_norm_one,         // group-point construction fed an element of norm != 1
  non_associative_kind, // operation requires an associative algebra
  budget_exceeded,      // search or enumeration exceeded its work budget
  not_orthogonal,       // dickson invariant of a map that is not an isometry
  unsupported_ring,     // operation undefined over this ring (e.g. dickson, 2 not a unit)
  char_two,             // 2 must be a unit for this operation
  singular,             // quadratic form is singular where nonsingular is required
  unknown_claim,        // verify called with an unregistered claim id
  invalid_algebra,      // algebra description file is malformed or inconsistent
  parse_error,          // ring spec / element / CLI input failed to parse
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ring_mismatch: return "RingMismatch";
    case Errc::spec_mismatch: return "SpecMismatch";
    case Errc::rank_mismatch: return "RankMismatch";
    case Errc::not_a_unit: return "NotAUnit";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::infinite_ring: return "InfiniteRing";
    case Errc::not_norm_one: return "NotNormOne";
    case Errc::non_associative_kind: return "NonAssociativeKind";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_orthogonal: return "NotOrthogonal";
    case Errc::unsupported_ring: return "UnsupportedRing";
    case Errc::char_two: return "CharTwo";
    case Errc::singular: return "Singular";
    case Errc::unknown_claim: return "UnknownClaim";
    case Errc::invalid_algebra: return "InvalidAlgebra";
    case Errc::parse_error: return "ParseError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace cayley
