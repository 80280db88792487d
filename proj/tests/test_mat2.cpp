#include <doctest.h>

#include <vector>

#include "cayley/mat2.hpp"
#include "test_util.hpp"

using namespace cayley;
using testutil::errc_of;

namespace {

Mat2 m(const RingSpec& R, long a, long b, long c, long d) {
  return {RingElem(R, a), RingElem(R, b), RingElem(R, c), RingElem(R, d)};
}

}  // namespace

TEST_CASE("spec oracles for the matrix product") {
  RingSpec z = RingSpec::integers();
  Mat2 x = m(z, 1, 2, 3, 4);
  // I * X = X  [TRIVIAL: identity]
  CHECK(Mat2::identity(z) * x == x);
  CHECK(x * Mat2::identity(z) == x);
  // [[0,1],[0,0]]^2 = 0 over any ring  [TRIVIAL: nilpotent square]
  for (const char* name : {"Z", "Q", "Z/8", "F5"}) {
    RingSpec R = RingSpec::parse(name);
    Mat2 e12 = m(R, 0, 1, 0, 0);
    CHECK(e12 * e12 == Mat2::zero(R));
  }
  // [[1,2],[3,4]] * [[0,1],[1,0]] = [[2,1],[4,3]]  [DERIVED: hand evaluation]
  CHECK(x * m(z, 0, 1, 1, 0) == m(z, 2, 1, 4, 3));
}

TEST_CASE("spec oracles for det and trace") {
  RingSpec z = RingSpec::integers();
  // det I = 1  [TRIVIAL]
  CHECK(det(Mat2::identity(z)) == RingElem::one(z));
  // det [[1,2],[3,4]] = -2  [DERIVED: hand evaluation]
  CHECK(det(m(z, 1, 2, 3, 4)) == RingElem(z, -2));
  // det [[1,1],[1,1]] = 0 over F2  [TRIVIAL: equal rows]
  RingSpec f2 = RingSpec::parse("F2");
  CHECK(det(m(f2, 1, 1, 1, 1)) == RingElem::zero(f2));
  // tr I = 2 over Z; tr [[1,2],[3,4]] = 5; tr I = 0 over F2  [TRIVIAL]
  CHECK(trace(Mat2::identity(z)) == RingElem(z, 2));
  CHECK(trace(m(z, 1, 2, 3, 4)) == RingElem(z, 5));
  CHECK(trace(Mat2::identity(f2)) == RingElem::zero(f2));
}

TEST_CASE("spec oracles for the canonical involution sigma") {
  RingSpec z = RingSpec::integers();
  Mat2 x = m(z, 1, 2, 3, 4);
  // sigma([[1,2],[3,4]]) = [[4,-2],[-3,1]]  [DERIVED: tr(X) I - X by hand]
  CHECK(conjugate(x) == m(z, 4, -2, -3, 1));
  // sigma(I) = I  [TRIVIAL]
  CHECK(conjugate(Mat2::identity(z)) == Mat2::identity(z));
  // sigma(X) * X = det(X) * I = [[-2,0],[0,-2]]  [DERIVED: hand evaluation]
  CHECK(conjugate(x) * x == m(z, -2, 0, 0, -2));
}

TEST_CASE("spec oracles for the inverse") {
  RingSpec z = RingSpec::integers();
  // I -> I  [TRIVIAL]
  CHECK(inverse(Mat2::identity(z)) == Mat2::identity(z));
  // [[1,1],[0,1]] -> [[1,-1],[0,1]]  [DERIVED: hand check product = I]
  CHECK(inverse(m(z, 1, 1, 0, 1)) == m(z, 1, -1, 0, 1));
  // [[1,1],[1,1]] over F3 -> NotInvertible  [TRIVIAL: det = 0]
  RingSpec f3 = RingSpec::parse("F3");
  CHECK(errc_of([&] { inverse(m(f3, 1, 1, 1, 1)); }) == Errc::not_invertible);
  CHECK(!is_invertible(m(f3, 1, 1, 1, 1)));
  // over Z, invertible iff det = +-1
  CHECK(!is_invertible(m(z, 1, 2, 3, 4)));  // det -2, not a unit in Z
  CHECK(errc_of([&] { inverse(m(z, 1, 2, 3, 4)); }) == Errc::not_invertible);
  CHECK(is_invertible(m(z, 2, 1, 1, 1)));  // det 1
  CHECK(inverse(m(z, 2, 1, 1, 1)) * m(z, 2, 1, 1, 1) == Mat2::identity(z));
}

TEST_CASE("sigma is an involutive anti-automorphism, exhaustively over F2 and F3") {
  // [DERIVED: exhaustive scan of all 16 and 81 matrices and all pairs]
  for (const char* name : {"F2", "F3"}) {
    RingSpec R = RingSpec::parse(name);
    std::vector<Mat2> all = mat2_enumerate(R);
    CHECK(all.size() == (name[1] == '2' ? 16u : 81u));
    Mat2 id = Mat2::identity(R);
    for (const Mat2& x : all) {
      CHECK(conjugate(conjugate(x)) == x);
      CHECK(conjugate(x) * x == det(x) * id);
      CHECK(x * conjugate(x) == det(x) * id);
      CHECK(trace(conjugate(x)) == trace(x));
      CHECK(det(conjugate(x)) == det(x));
    }
    for (const Mat2& x : all)
      for (const Mat2& y : all) {
        CHECK(conjugate(x * y) == conjugate(y) * conjugate(x));
        CHECK(det(x * y) == det(x) * det(y));
        CHECK(trace(x * y) == trace(y * x));
      }
  }
}

TEST_CASE("inverse agrees with brute-force search, exhaustively over F2 and F3") {
  // [DERIVED: for every X, scan all Y for XY = YX = I]
  for (const char* name : {"F2", "F3"}) {
    RingSpec R = RingSpec::parse(name);
    std::vector<Mat2> all = mat2_enumerate(R);
    Mat2 id = Mat2::identity(R);
    for (const Mat2& x : all) {
      const Mat2* brute = nullptr;
      for (const Mat2& y : all)
        if (x * y == id && y * x == id) brute = &y;
      CHECK(is_invertible(x) == (brute != nullptr));
      CHECK(is_invertible(x) == det(x).is_unit());
      if (brute) CHECK(inverse(x) == *brute);
    }
  }
}

TEST_CASE("sigma properties over Z/6, where the ring has zero divisors") {
  // the involution identities are ring-uniform, not field-specific
  RingSpec R = RingSpec::parse("Z/6");
  std::vector<Mat2> all = mat2_enumerate(R);
  CHECK(all.size() == 1296);
  Mat2 id = Mat2::identity(R);
  for (const Mat2& x : all) {
    CHECK(conjugate(conjugate(x)) == x);
    CHECK(x * conjugate(x) == det(x) * id);
  }
}

TEST_CASE("mixed-ring matrix operations throw RingMismatch") {
  RingSpec f2 = RingSpec::parse("F2");
  RingSpec f3 = RingSpec::parse("F3");
  CHECK(errc_of([&] { (void)(Mat2::identity(f2) * Mat2::identity(f3)); }) ==
        Errc::ring_mismatch);
  CHECK(errc_of([&] { (void)(Mat2::identity(f2) + Mat2::identity(f3)); }) ==
        Errc::ring_mismatch);
}

TEST_CASE("coords round-trip in the fixed (E11, E12, E21, E22) order") {
  RingSpec z = RingSpec::integers();
  Mat2 x = m(z, 1, 2, 3, 4);
  auto c = x.coords();
  CHECK(c[0] == RingElem(z, 1));
  CHECK(c[1] == RingElem(z, 2));
  CHECK(c[2] == RingElem(z, 3));
  CHECK(c[3] == RingElem(z, 4));
  CHECK(Mat2::from_coords(c) == x);
}
