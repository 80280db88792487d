#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cayley/rings.hpp"

namespace cayley {

// Square matrix over one of the supported rings, acting on coordinate
// columns: (T v)_i = sum_j T(i, j) v_j.  Column j is the image of the j-th
// basis vector.
class LinMap {
 public:
  LinMap(RingSpec ring, int n);  // zero map
  static LinMap identity(const RingSpec& ring, int n);
  static LinMap from_columns(const RingSpec& ring,
                             const std::vector<std::vector<RingElem>>& cols);

  int dim() const { return n_; }
  const RingSpec& ring() const { return ring_; }
  RingElem& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const RingElem& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  std::vector<RingElem> column(int j) const;
  std::vector<RingElem> apply(const std::vector<RingElem>& v) const;

  friend LinMap operator*(const LinMap& a, const LinMap& b);  // composition
  friend LinMap operator+(const LinMap& a, const LinMap& b);
  friend LinMap operator-(const LinMap& a, const LinMap& b);
  bool operator==(const LinMap& b) const { return ring_ == b.ring_ && n_ == b.n_ && e_ == b.e_; }
  std::strong_ordering operator<=>(const LinMap& b) const;  // entry lex, row-major

  // Division-free determinant (expansion over column subsets), valid over
  // any commutative ring.
  RingElem det() const;
  bool is_invertible() const { return det().is_unit(); }
  LinMap inverse() const;  // throws NotInvertible
  LinMap transpose() const;
  std::string str() const;

 private:
  RingSpec ring_;
  int n_;
  std::vector<RingElem> e_;  // row-major
};

// Row rank by Gaussian elimination; requires a field (UnsupportedRing otherwise).
int rank_over_field(LinMap m);

inline void require_same_space(const LinMap& a, const LinMap& b) {
  if (a.ring() != b.ring())
    fail(Errc::ring_mismatch, "maps over " + a.ring().str() + " and " + b.ring().str());
  if (a.dim() != b.dim())
    fail(Errc::rank_mismatch, "maps of dimension " + std::to_string(a.dim()) + " and " +
                                  std::to_string(b.dim()));
}

}  // namespace cayley
