#include <doctest.h>

#include <vector>

#include "cayley/algebras.hpp"
#include "test_util.hpp"

using namespace cayley;
using testutil::errc_of;

namespace {

AlgElem elem(const AlgebraRef& alg, std::vector<long> v) {
  std::vector<RingElem> c;
  c.reserve(v.size());
  for (long x : v) c.emplace_back(alg->ring(), Int(x));
  return {alg, std::move(c)};
}

// Doubled element (X, Y) from two 2x2 matrices in the canonical basis order.
AlgElem pair_elem(const AlgebraRef& dalg, const Mat2& x, const Mat2& y) {
  std::vector<RingElem> c;
  for (const RingElem& e : x.coords()) c.push_back(e);
  for (const RingElem& e : y.coords()) c.push_back(e);
  return {dalg, std::move(c)};
}

Mat2 m(const RingSpec& R, long a, long b, long c, long d) {
  return {RingElem(R, a), RingElem(R, b), RingElem(R, c), RingElem(R, d)};
}

}  // namespace

TEST_CASE("spec construction and validation") {
  RingSpec f5 = RingSpec::parse("F5");
  AlgebraRef q = AlgebraSpec::quaternion(f5, RingElem(f5, 2), RingElem(f5, 3));
  CHECK(q->rank() == 4);
  CHECK(q->is_associative());
  CHECK(q->param_a() == RingElem(f5, 2));
  CHECK(q->param_b() == RingElem(f5, 3));

  AlgebraRef z = AlgebraSpec::zorn(RingSpec::parse("F2"));
  CHECK(z->rank() == 8);
  CHECK(z->is_octonion());
  CHECK(!z->is_associative());

  AlgebraRef d = AlgebraSpec::doubled(AlgebraSpec::m2(RingSpec::integers()),
                                      RingElem::one(RingSpec::integers()));
  CHECK(d->rank() == 8);
  CHECK(d->base()->kind() == AlgKind::m2);
  CHECK(d->lambda().is_one());

  // 2 must be a unit for structure-constant quaternions
  RingSpec f2 = RingSpec::parse("F2");
  CHECK(errc_of([&] {
          AlgebraSpec::quaternion(f2, RingElem::one(f2), RingElem::one(f2));
        }) == Errc::char_two);
  // a and b must be units: 3 is a zero divisor in Z/9
  RingSpec z9 = RingSpec::parse("Z/9");
  CHECK(errc_of([&] {
          AlgebraSpec::quaternion(z9, RingElem(z9, 3), RingElem(z9, 5));
        }) == Errc::not_a_unit);
  // doubling is defined over associative bases only
  CHECK(errc_of([&] {
          AlgebraSpec::doubled(AlgebraSpec::zorn(RingSpec::parse("F3")),
                               RingElem::one(RingSpec::parse("F3")));
        }) == Errc::invalid_algebra);
  // lambda must be a unit
  CHECK(errc_of([&] {
          AlgebraSpec::doubled(AlgebraSpec::m2(RingSpec::integers()),
                               RingElem(RingSpec::integers(), 2));
        }) == Errc::not_a_unit);
  // kind-specific accessors reject other kinds
  CHECK(errc_of([&] { AlgebraSpec::m2(f5)->param_a(); }) == Errc::spec_mismatch);
  CHECK(errc_of([&] { q->lambda(); }) == Errc::spec_mismatch);
  CHECK(errc_of([&] { q->base(); }) == Errc::spec_mismatch);
}

TEST_CASE("spec oracles for doubled multiplication") {
  RingSpec z = RingSpec::integers();
  AlgebraRef d = AlgebraSpec::doubled(AlgebraSpec::m2(z), RingElem::one(z));
  Mat2 zero2 = Mat2::zero(z);
  Mat2 id2 = Mat2::identity(z);
  Mat2 x = m(z, 1, 2, 3, 4);
  Mat2 u = m(z, 5, -1, 0, 2);

  // (X,0)(U,0) = (XU, 0)  [TRIVIAL: first-summand embedding of M2]
  CHECK(pair_elem(d, x, zero2) * pair_elem(d, u, zero2) == pair_elem(d, x * u, zero2));
  // (0,I)(0,I) = (I,0)  [PAPER: x u + v sigma(y) with x = u = 0, v = y = I]
  CHECK(pair_elem(d, zero2, id2) * pair_elem(d, zero2, id2) == pair_elem(d, id2, zero2));
  // identity element is (I, 0)
  CHECK(alg_one(d) == pair_elem(d, id2, zero2));
}

TEST_CASE("doubled multiplication matches the hand-assembled law over F3") {
  // [DERIVED: (x,y)(u,v) = (xu + lambda v sigma(y), sigma(x) v + u y) computed
  // directly with Mat2 arithmetic, for lambda = 1 and lambda = -1]
  RingSpec f3 = RingSpec::parse("F3");
  std::vector<Mat2> some;
  for (long a = 0; a < 3; ++a)  // a small but varied slice of M2(F3)
    for (long b = 0; b < 3; ++b) some.push_back(m(f3, a, b, a + b, 2 * a + 1));
  for (long lam : {1L, 2L}) {
    RingElem lambda(f3, lam);
    AlgebraRef d = AlgebraSpec::doubled(AlgebraSpec::m2(f3), lambda);
    for (const Mat2& x : some)
      for (const Mat2& y : some)
        for (const Mat2& u : some) {
          const Mat2& v = y;  // reuse the slice for the fourth coordinate
          Mat2 first = x * u + lambda * (v * conjugate(y));
          Mat2 second = conjugate(x) * v + u * y;
          CHECK(pair_elem(d, x, y) * pair_elem(d, u, v) == pair_elem(d, first, second));
        }
  }
}

TEST_CASE("spec oracles for quaternion structure constants") {
  RingSpec q = RingSpec::rationals();
  AlgebraRef h = AlgebraSpec::quaternion(q, RingElem(q, -1), RingElem(q, -1));
  AlgElem one = elem(h, {1, 0, 0, 0});
  AlgElem i = elem(h, {0, 1, 0, 0});
  AlgElem j = elem(h, {0, 0, 1, 0});
  AlgElem k = elem(h, {0, 0, 0, 1});
  // i j = ij and j i = -ij  [TRIVIAL: structure constants]
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(i * i == -one);
  CHECK(j * j == -one);

  // general (a, b): i^2 = a, j^2 = b, k = ij, k^2 = -ab, ik = aj, kj = bi
  RingSpec f5 = RingSpec::parse("F5");
  AlgebraRef qa = AlgebraSpec::quaternion(f5, RingElem(f5, 2), RingElem(f5, 3));
  AlgElem one5 = alg_one(qa);
  AlgElem i5 = alg_basis(qa, 1);
  AlgElem j5 = alg_basis(qa, 2);
  AlgElem k5 = alg_basis(qa, 3);
  CHECK(i5 * i5 == RingElem(f5, 2) * one5);
  CHECK(j5 * j5 == RingElem(f5, 3) * one5);
  CHECK(i5 * j5 == k5);
  CHECK(j5 * i5 == -k5);
  CHECK(k5 * k5 == RingElem(f5, -6) * one5);
  CHECK(i5 * k5 == RingElem(f5, 2) * j5);
  CHECK(k5 * j5 == RingElem(f5, 3) * i5);
}

TEST_CASE("spec oracles for conjugation") {
  RingSpec q = RingSpec::rationals();
  AlgebraRef h = AlgebraSpec::quaternion(q, RingElem(q, -1), RingElem(q, -1));
  // conj(1 + i) = 1 - i  [TRIVIAL: trace(1 + i) = 2]
  CHECK(conj(elem(h, {1, 1, 0, 0})) == elem(h, {1, -1, 0, 0}));

  // conj (I, I) = (I, -I) in Doubled(M2,1)/Z  [DERIVED: trace 2, so 2*1 - x]
  RingSpec z = RingSpec::integers();
  AlgebraRef d = AlgebraSpec::doubled(AlgebraSpec::m2(z), RingElem::one(z));
  Mat2 id2 = Mat2::identity(z);
  AlgElem ii = pair_elem(d, id2, id2);
  CHECK(conj(ii) == pair_elem(d, id2, RingElem(z, -1) * id2));
  CHECK(trace(ii) == RingElem(z, 2));

  // conj(1) = 1 in every algebra  [TRIVIAL]
  for (const AlgebraRef& alg :
       {AlgebraSpec::m2(z), AlgebraSpec::zorn(z), d,
        AlgebraSpec::quaternion(q, RingElem(q, -1), RingElem(q, -1))})
    CHECK(conj(alg_one(alg)) == alg_one(alg));
}

TEST_CASE("spec oracles for norm and trace") {
  RingSpec z = RingSpec::integers();
  AlgebraRef d = AlgebraSpec::doubled(AlgebraSpec::m2(z), RingElem::one(z));
  Mat2 id2 = Mat2::identity(z);
  // norm (I, I) = det - det = 0  [PAPER: "det(x) - det(y)"]
  CHECK(norm(pair_elem(d, id2, id2)) == RingElem::zero(z));
  // trace (X, Y) = tr(X)  [DERIVED: polarize the norm against (I, 0)]
  Mat2 x = m(z, 1, 2, 3, 4);
  Mat2 y = m(z, 9, 8, 7, 6);
  CHECK(trace(pair_elem(d, x, y)) == trace(x));

  // norm(1 + i + j + ij) = 4 for Hamilton over Q  [DERIVED: 1 + 1 + 1 + 1]
  RingSpec q = RingSpec::rationals();
  AlgebraRef h = AlgebraSpec::quaternion(q, RingElem(q, -1), RingElem(q, -1));
  CHECK(norm(elem(h, {1, 1, 1, 1})) == RingElem(q, 4));

  // norm(1) = 1 and trace(1) = 2 in every kind over Z  [TRIVIAL]
  for (const AlgebraRef& alg : {AlgebraSpec::m2(z), AlgebraSpec::zorn(z), d}) {
    CHECK(norm(alg_one(alg)) == RingElem::one(z));
    CHECK(trace(alg_one(alg)) == RingElem(z, 2));
  }
}

TEST_CASE("the m2 kind is the matrix algebra, exhaustively over F2") {
  // [DERIVED: all 256 ordered pairs compared against Mat2 arithmetic]
  RingSpec f2 = RingSpec::parse("F2");
  AlgebraRef a = AlgebraSpec::m2(f2);
  std::vector<AlgElem> all = alg_enumerate(a);
  REQUIRE(all.size() == 16);
  for (const AlgElem& x : all) {
    Mat2 mx = as_mat2(x);
    CHECK(norm(x) == det(mx));
    CHECK(trace(x) == trace(mx));
    CHECK(as_mat2(conj(x)) == conjugate(mx));
    CHECK(from_mat2(a, mx) == x);
    for (const AlgElem& y : all) CHECK(as_mat2(x * y) == as_mat2(x) * as_mat2(y));
  }
  CHECK(errc_of([&] { as_mat2(alg_one(AlgebraSpec::zorn(f2))); }) == Errc::spec_mismatch);
}

TEST_CASE("Zorn basis products follow the pinned multiplication law") {
  // Basis order (d1, d2, u1, u2, u3, w1, w2, w3).  [DERIVED: hand evaluation
  // of the dot/cross-product law on basis vectors]
  RingSpec z = RingSpec::integers();
  AlgebraRef c = AlgebraSpec::zorn(z);
  AlgElem d1 = alg_basis(c, 0), d2 = alg_basis(c, 1);
  AlgElem u1 = alg_basis(c, 2), u2 = alg_basis(c, 3), u3 = alg_basis(c, 4);
  AlgElem w1 = alg_basis(c, 5), w2 = alg_basis(c, 6), w3 = alg_basis(c, 7);

  CHECK(d1 + d2 == alg_one(c));
  CHECK(d1 * d1 == d1);
  CHECK(d2 * d2 == d2);
  CHECK(d1 * d2 == alg_zero(c));
  // Peirce behavior of the off-diagonal basis vectors
  CHECK(d1 * u1 == u1);
  CHECK(u1 * d1 == alg_zero(c));
  CHECK(u1 * d2 == u1);
  // cross products: u_i u_j = w_k for cyclic (i, j, k)
  CHECK(u1 * u2 == w3);
  CHECK(u2 * u3 == w1);
  CHECK(u3 * u1 == w2);
  CHECK(w1 * w2 == -u3);
  // dot products: u_i w_i = d1, w_i u_i = d2
  CHECK(u1 * w1 == d1);
  CHECK(w1 * u1 == d2);
  CHECK(w3 * u3 == d2);
  // the recorded associativity-failure witness: (u1 u2) u3 != u1 (u2 u3)
  CHECK((u1 * u2) * u3 == d2);
  CHECK(u1 * (u2 * u3) == d1);
  CHECK((u1 * u2) * u3 != u1 * (u2 * u3));
  // norm = ab - <v, w>; trace = a + b
  CHECK(norm(u1) == RingElem::zero(z));
  CHECK(norm(d1 + w2) == RingElem::zero(z));
  CHECK(norm(alg_one(c) + u1 + w1) == RingElem::zero(z));  // 1*1 - 1
  CHECK(trace(d1) == RingElem::one(z));
  CHECK(trace(u1) == RingElem::zero(z));
}

TEST_CASE("composition identities hold on the small corpus") {
  // x conj(x) = norm(x) 1, conj is an involutive anti-automorphism, and the
  // norm is multiplicative -- exhaustive on rank-4/F3 and Zorn/F2.
  RingSpec f3 = RingSpec::parse("F3");
  RingSpec f2 = RingSpec::parse("F2");
  for (const AlgebraRef& alg :
       {AlgebraSpec::m2(f3), AlgebraSpec::quaternion(f3, RingElem::one(f3), RingElem(f3, 2)),
        AlgebraSpec::zorn(f2)}) {
    std::vector<AlgElem> all = alg_enumerate(alg);
    AlgElem one = alg_one(alg);
    for (const AlgElem& x : all) {
      CHECK(x * conj(x) == norm(x) * one);
      CHECK(conj(x) * x == norm(x) * one);
      CHECK(conj(conj(x)) == x);
      CHECK(trace(x) * one == x + conj(x));
      CHECK(one * x == x);
      CHECK(x * one == x);
    }
    for (const AlgElem& x : all)
      for (const AlgElem& y : all) {
        CHECK(norm(x * y) == norm(x) * norm(y));
        CHECK(conj(x * y) == conj(y) * conj(x));
      }
  }
}

TEST_CASE("inversion matches brute force over QuaternionSC(2,3)/F5") {
  // [DERIVED: exhaustive two-sided-inverse scan over all 625 elements]
  RingSpec f5 = RingSpec::parse("F5");
  AlgebraRef q = AlgebraSpec::quaternion(f5, RingElem(f5, 2), RingElem(f5, 3));
  std::vector<AlgElem> all = alg_enumerate(q);
  REQUIRE(all.size() == 625);
  AlgElem one = alg_one(q);
  for (const AlgElem& x : all) {
    CHECK(alg_is_invertible(x) == norm(x).is_unit());
    if (alg_is_invertible(x)) {
      AlgElem xi = alg_inverse(x);
      CHECK(x * xi == one);
      CHECK(xi * x == one);
    } else {
      CHECK(errc_of([&] { alg_inverse(x); }) == Errc::not_invertible);
    }
  }
}

TEST_CASE("enumeration sizes and order") {
  // Zorn/F2 -> 256 elements  [TRIVIAL: 2^8]
  CHECK(alg_enumerate(AlgebraSpec::zorn(RingSpec::parse("F2"))).size() == 256);
  // M2/F3 -> 81 elements  [TRIVIAL: 3^4]
  std::vector<AlgElem> m2f3 = alg_enumerate(AlgebraSpec::m2(RingSpec::parse("F3")));
  CHECK(m2f3.size() == 81);
  // deterministic lexicographic order, last coordinate fastest
  CHECK(m2f3[0] == alg_zero(m2f3[0].algebra()));
  CHECK(m2f3[1] == alg_basis(m2f3[1].algebra(), 3));
  CHECK(std::is_sorted(m2f3.begin(), m2f3.end()));
  // QuaternionSC over Q -> InfiniteRing  [TRIVIAL]
  RingSpec q = RingSpec::rationals();
  CHECK(errc_of([&] {
          alg_enumerate(AlgebraSpec::quaternion(q, RingElem(q, -1), RingElem(q, -1)));
        }) == Errc::infinite_ring);
}

TEST_CASE("zorn_to_doubled is a unital isomorphism, exhaustively over F2") {
  RingSpec f2 = RingSpec::parse("F2");
  AlgebraRef zn = AlgebraSpec::zorn(f2);
  AlgebraRef db = AlgebraSpec::doubled(AlgebraSpec::m2(f2), RingElem::one(f2));
  // 1_Zorn -> (I, 0)  [TRIVIAL: unital]
  CHECK(zorn_to_doubled(alg_one(zn), db) == alg_one(db));
  std::vector<AlgElem> all = alg_enumerate(zn);
  // linear bijection with multiplicativity and norm preservation on all
  // 65,536 ordered pairs / 256 elements  [DERIVED: exhaustive oracle]
  for (const AlgElem& x : all) {
    AlgElem fx = zorn_to_doubled(x, db);
    CHECK(norm(fx) == norm(x));
    CHECK(doubled_to_zorn(fx, zn) == x);
  }
  for (const AlgElem& x : all)
    for (const AlgElem& y : all)
      CHECK(zorn_to_doubled(x * y) == zorn_to_doubled(x) * zorn_to_doubled(y));
  // the overloads validate their explicit target spec
  AlgebraRef wrong = AlgebraSpec::doubled(AlgebraSpec::m2(f2), RingElem::one(f2));
  CHECK(errc_of([&] {
          zorn_to_doubled(alg_one(zn),
                          AlgebraSpec::doubled(AlgebraSpec::quaternion(
                                                   RingSpec::parse("F3"),
                                                   RingElem::one(RingSpec::parse("F3")),
                                                   RingElem::one(RingSpec::parse("F3"))),
                                               RingElem::one(RingSpec::parse("F3"))));
        }) == Errc::spec_mismatch);
  CHECK(zorn_to_doubled(alg_one(zn), wrong) == alg_one(wrong));
}

TEST_CASE("mixed-spec arithmetic throws SpecMismatch") {
  RingSpec f3 = RingSpec::parse("F3");
  AlgElem a = alg_one(AlgebraSpec::m2(f3));
  AlgElem b = alg_one(AlgebraSpec::quaternion(f3, RingElem::one(f3), RingElem::one(f3)));
  CHECK(errc_of([&] { (void)(a * b); }) == Errc::spec_mismatch);
  CHECK(errc_of([&] { (void)(a + b); }) == Errc::spec_mismatch);
  // same kind over different rings is also a mismatch
  AlgElem c = alg_one(AlgebraSpec::m2(RingSpec::parse("F5")));
  CHECK(errc_of([&] { (void)(a * c); }) == Errc::spec_mismatch);
}
