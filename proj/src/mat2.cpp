#include "cayley/mat2.hpp"

namespace cayley {

Mat2::Mat2(RingElem a, RingElem b, RingElem c, RingElem d)
    : e11(std::move(a)), e12(std::move(b)), e21(std::move(c)), e22(std::move(d)) {
  require_same_ring(e11, e12);
  require_same_ring(e11, e21);
  require_same_ring(e11, e22);
}

Mat2 Mat2::zero(const RingSpec& ring) {
  RingElem z = RingElem::zero(ring);
  return {z, z, z, z};
}

Mat2 Mat2::identity(const RingSpec& ring) {
  RingElem z = RingElem::zero(ring);
  RingElem o = RingElem::one(ring);
  return {o, z, z, o};
}

std::string Mat2::str() const {
  return "[[" + e11.str() + ", " + e12.str() + "], [" + e21.str() + ", " +
         e22.str() + "]]";
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.e11 + b.e11, a.e12 + b.e12, a.e21 + b.e21, a.e22 + b.e22};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.e11 - b.e11, a.e12 - b.e12, a.e21 - b.e21, a.e22 - b.e22};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
          a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
}

Mat2 operator*(const RingElem& c, const Mat2& a) {
  return {c * a.e11, c * a.e12, c * a.e21, c * a.e22};
}

RingElem det(const Mat2& a) { return a.e11 * a.e22 - a.e12 * a.e21; }

RingElem trace(const Mat2& a) { return a.e11 + a.e22; }

Mat2 conjugate(const Mat2& a) { return {a.e22, -a.e12, -a.e21, a.e11}; }

bool is_invertible(const Mat2& a) { return det(a).is_unit(); }

Mat2 inverse(const Mat2& a) {
  RingElem d = det(a);
  if (!d.is_unit())
    fail(Errc::not_invertible, "det = " + d.str() + " is not a unit in " + a.ring().str());
  return d.inv() * conjugate(a);
}

std::vector<Mat2> mat2_enumerate(const RingSpec& ring) {
  auto elems = ring_enumerate(ring);
  std::vector<Mat2> out;
  out.reserve(elems.size() * elems.size() * elems.size() * elems.size());
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& c : elems)
        for (const auto& d : elems) out.emplace_back(a, b, c, d);
  return out;
}

}  // namespace cayley
