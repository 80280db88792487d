#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "cayley/mat2.hpp"
#include "cayley/rings.hpp"

namespace cayley {

enum class AlgKind { m2, quaternion, zorn, doubled };

class AlgebraSpec;
using AlgebraRef = std::shared_ptr<const AlgebraSpec>;

// Description of a composition algebra over a base ring.  Canonical bases
// are fixed project-wide:
//   m2          (E11, E12, E21, E22)
//   quaternion  (1, i, j, ij)            with i^2 = a, j^2 = b, ij = -ji
//   zorn        (d1, d2, u1, u2, u3, w1, w2, w3)
//               coordinates (a, b, v1, v2, v3, w1, w2, w3) of [[a, v], [w, b]]
//   doubled     base basis as (e, 0), then base basis as (0, e)
class AlgebraSpec {
 public:
  static AlgebraRef m2(const RingSpec& ring);
  // Requires 2, a, b units (CharTwo / NotAUnit otherwise).
  static AlgebraRef quaternion(const RingSpec& ring, RingElem a, RingElem b);
  static AlgebraRef zorn(const RingSpec& ring);
  // Cayley-Dickson double of an associative base (m2 or quaternion):
  //   (x, y) * (u, v) = (x u + lambda * v * sigma(y), sigma(x) v + u y)
  // Requires lambda a unit.
  static AlgebraRef doubled(AlgebraRef base, RingElem lambda);

  AlgKind kind() const { return kind_; }
  const RingSpec& ring() const { return ring_; }
  int rank() const { return kind_ == AlgKind::m2 || kind_ == AlgKind::quaternion ? 4 : 8; }
  bool is_associative() const { return rank() == 4; }
  bool is_octonion() const { return rank() == 8; }
  const RingElem& param_a() const;   // quaternion only
  const RingElem& param_b() const;   // quaternion only
  const AlgebraRef& base() const;    // doubled only
  const RingElem& lambda() const;    // doubled only
  std::string basis_name(int i) const;
  std::string str() const;
  bool operator==(const AlgebraSpec& b) const;

 private:
  AlgebraSpec(RingSpec ring, AlgKind kind) : ring_(std::move(ring)), kind_(kind) {}
  RingSpec ring_;
  AlgKind kind_;
  std::vector<RingElem> params_;  // {a, b} for quaternion, {lambda} for doubled
  AlgebraRef base_;               // doubled only
};

// Algebra element: a coordinate vector in the canonical basis, tagged with
// its algebra.  Mixed-algebra arithmetic throws SpecMismatch.
class AlgElem {
 public:
  AlgElem(AlgebraRef alg, std::vector<RingElem> coords);

  const AlgebraRef& algebra() const { return alg_; }
  const AlgebraSpec& spec() const { return *alg_; }
  const std::vector<RingElem>& coords() const { return coords_; }
  const RingElem& operator[](size_t i) const { return coords_[i]; }
  bool is_zero() const;
  std::string str() const;

  friend AlgElem operator+(const AlgElem& x, const AlgElem& y);
  friend AlgElem operator-(const AlgElem& x, const AlgElem& y);
  friend AlgElem operator*(const AlgElem& x, const AlgElem& y);
  friend AlgElem operator*(const RingElem& c, const AlgElem& x);
  friend AlgElem operator-(const AlgElem& x);
  bool operator==(const AlgElem& y) const;
  std::strong_ordering operator<=>(const AlgElem& y) const;  // coordinate lex

 private:
  AlgebraRef alg_;
  std::vector<RingElem> coords_;
};

AlgElem alg_zero(const AlgebraRef& alg);
AlgElem alg_one(const AlgebraRef& alg);
AlgElem alg_basis(const AlgebraRef& alg, int i);
AlgElem alg_scalar(const AlgebraRef& alg, const RingElem& c);  // c * 1

// Conjugation is uniformly trace(x) * 1 - x; x * conj(x) = norm(x) * 1.
AlgElem conj(const AlgElem& x);
RingElem norm(const AlgElem& x);
RingElem trace(const AlgElem& x);
bool alg_is_invertible(const AlgElem& x);  // norm(x) is a unit
AlgElem alg_inverse(const AlgElem& x);     // throws NotInvertible

// All |R|^rank elements over a finite ring, ascending lexicographic in
// coordinates (last coordinate fastest).  Throws InfiniteRing otherwise.
std::vector<AlgElem> alg_enumerate(const AlgebraRef& alg);

Mat2 as_mat2(const AlgElem& x);  // m2 kind only
AlgElem from_mat2(const AlgebraRef& alg, const Mat2& m);

// The structural isomorphism Zorn(R) -> Doubled(M2(R), 1):
//   (a, b, v1, v2, v3, w1, w2, w3) |-> (X, Y),
//   X = [[a, v1], [w1, b]], Y = [[w3, w2], [-v2, v3]].
// Unital, linear, multiplicative, norm-preserving; doubled_to_zorn is its
// two-sided inverse.  The overloads taking a target spec validate it.
AlgElem zorn_to_doubled(const AlgElem& x);
AlgElem zorn_to_doubled(const AlgElem& x, const AlgebraRef& target);
AlgElem doubled_to_zorn(const AlgElem& x);
AlgElem doubled_to_zorn(const AlgElem& x, const AlgebraRef& target);

inline void require_same_spec(const AlgElem& x, const AlgElem& y) {
  if (x.algebra() != y.algebra() && !(x.spec() == y.spec()))
    fail(Errc::spec_mismatch,
         "operands live in " + x.spec().str() + " and " + y.spec().str());
}

}  // namespace cayley
