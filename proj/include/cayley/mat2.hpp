#pragma once

#include <array>
#include <string>
#include <vector>

#include "cayley/rings.hpp"

namespace cayley {

// 2x2 matrix over one of the supported rings.  Coordinates follow the
// project-wide basis order (E11, E12, E21, E22).
class Mat2 {
 public:
  Mat2(RingElem e11, RingElem e12, RingElem e21, RingElem e22);
  static Mat2 zero(const RingSpec& ring);
  static Mat2 identity(const RingSpec& ring);
  static Mat2 from_coords(const std::array<RingElem, 4>& c) {
    return {c[0], c[1], c[2], c[3]};
  }

  const RingSpec& ring() const { return e11.ring(); }
  std::array<RingElem, 4> coords() const { return {e11, e12, e21, e22}; }
  std::string str() const;

  friend Mat2 operator+(const Mat2& a, const Mat2& b);
  friend Mat2 operator-(const Mat2& a, const Mat2& b);
  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend Mat2 operator*(const RingElem& c, const Mat2& a);  // scalar
  bool operator==(const Mat2& b) const = default;

  RingElem e11, e12, e21, e22;
};

RingElem det(const Mat2& a);
RingElem trace(const Mat2& a);

// Canonical involution sigma(X) = trace(X) * I - X (the adjugate);
// X * sigma(X) = det(X) * I.
Mat2 conjugate(const Mat2& a);

bool is_invertible(const Mat2& a);
Mat2 inverse(const Mat2& a);  // throws NotInvertible when det is not a unit

// All 2x2 matrices over a finite ring, lexicographic in (e11, e12, e21, e22)
// with each coordinate ascending.
std::vector<Mat2> mat2_enumerate(const RingSpec& ring);

}  // namespace cayley
