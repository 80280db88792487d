#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/error.hpp"

namespace cayley {

using Int = boost::multiprecision::cpp_int;

enum class RingKind { integers, rationals, mod_ring, prime_field };

// One of the supported base rings: Z, Q, Z/n (n >= 2, composite allowed),
// or F_p (p prime).  Parsed from the spec strings "Z", "Q", "Z/<n>", "F<p>".
class RingSpec {
 public:
  static RingSpec integers() { return {RingKind::integers, 0}; }
  static RingSpec rationals() { return {RingKind::rationals, 0}; }
  static RingSpec mod_ring(const Int& n);
  static RingSpec prime_field(const Int& p);
  static RingSpec parse(std::string_view text);

  RingKind kind() const { return kind_; }
  const Int& modulus() const { return modulus_; }
  bool is_finite() const {
    return kind_ == RingKind::mod_ring || kind_ == RingKind::prime_field;
  }
  bool is_field() const {
    return kind_ == RingKind::rationals || kind_ == RingKind::prime_field;
  }
  Int cardinality() const;  // throws InfiniteRing over Z and Q
  bool two_is_unit() const;
  std::string str() const;
  bool operator==(const RingSpec&) const = default;

 private:
  RingSpec(RingKind k, Int n) : kind_(k), modulus_(std::move(n)) {}
  RingKind kind_;
  Int modulus_;  // 0 for Z and Q
};

// An element tagged with its ring, always in canonical form:
//   Z      value, den = 1
//   Q      reduced fraction, den > 0
//   Z/n    least non-negative residue, den = 1
//   F_p    least non-negative residue, den = 1
// Mixed-ring arithmetic throws RingMismatch; nothing coerces silently.
class RingElem {
 public:
  RingElem(RingSpec spec, Int value);
  static RingElem fraction(const RingSpec& spec, Int num, Int den);
  static RingElem zero(const RingSpec& spec) { return {spec, 0}; }
  static RingElem one(const RingSpec& spec) { return {spec, 1}; }
  static RingElem parse(const RingSpec& spec, std::string_view text);

  const RingSpec& ring() const { return spec_; }
  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_unit() const;
  RingElem inv() const;  // throws NotAUnit
  std::string str() const;

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a);
  RingElem& operator+=(const RingElem& b) { return *this = *this + b; }
  RingElem& operator-=(const RingElem& b) { return *this = *this - b; }
  RingElem& operator*=(const RingElem& b) { return *this = *this * b; }

  bool operator==(const RingElem& b) const {
    return spec_ == b.spec_ && num_ == b.num_ && den_ == b.den_;
  }
  // Canonical total order within one ring (used for deterministic sorting);
  // comparing elements of different rings throws RingMismatch.
  std::strong_ordering operator<=>(const RingElem& b) const;

 private:
  RingElem(RingSpec spec, Int num, Int den)
      : spec_(std::move(spec)), num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();
  RingSpec spec_;
  Int num_;
  Int den_;
};

// All elements in ascending order of canonical representative
// (0, 1, ..., n-1).  Throws InfiniteRing over Z and Q.
std::vector<RingElem> ring_enumerate(const RingSpec& spec);

// Units of a finite ring, ascending.
std::vector<RingElem> ring_units(const RingSpec& spec);

inline void require_same_ring(const RingElem& a, const RingElem& b) {
  if (a.ring() != b.ring())
    fail(Errc::ring_mismatch,
         "operands live in " + a.ring().str() + " and " + b.ring().str());
}

}  // namespace cayley
