#include "cayley/algebras.hpp"

#include <algorithm>

namespace cayley {
namespace {

using Coords = std::vector<RingElem>;

// Rank-4 product in the canonical basis.  m2: (E11, E12, E21, E22);
// quaternion: (1, i, j, k) with k = ij, i*k = a*j, k*i = -a*j, j*k = -b*i,
// k*j = b*i, k^2 = -a*b.
Coords mul4(const AlgebraSpec& A, const Coords& x, const Coords& y) {
  if (A.kind() == AlgKind::m2) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  }
  const RingElem& a = A.param_a();
  const RingElem& b = A.param_b();
  RingElem ab = a * b;
  return {
      x[0] * y[0] + a * (x[1] * y[1]) + b * (x[2] * y[2]) - ab * (x[3] * y[3]),
      x[0] * y[1] + x[1] * y[0] - b * (x[2] * y[3]) + b * (x[3] * y[2]),
      x[0] * y[2] + x[2] * y[0] + a * (x[1] * y[3]) - a * (x[3] * y[1]),
      x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]};
}

RingElem trace4(const AlgebraSpec& A, const Coords& x) {
  if (A.kind() == AlgKind::m2) return x[0] + x[3];
  return x[0] + x[0];
}

Coords conj4(const AlgebraSpec& A, const Coords& x) {
  if (A.kind() == AlgKind::m2) return {x[3], -x[1], -x[2], x[0]};
  return {x[0], -x[1], -x[2], -x[3]};
}

RingElem norm4(const AlgebraSpec& A, const Coords& x) {
  if (A.kind() == AlgKind::m2) return x[0] * x[3] - x[1] * x[2];
  const RingElem& a = A.param_a();
  const RingElem& b = A.param_b();
  return x[0] * x[0] - a * (x[1] * x[1]) - b * (x[2] * x[2]) +
         a * b * (x[3] * x[3]);
}

Coords scaled(const RingElem& c, const Coords& x) {
  Coords out;
  out.reserve(x.size());
  for (const auto& xi : x) out.push_back(c * xi);
  return out;
}

Coords added(const Coords& x, const Coords& y) {
  Coords out;
  out.reserve(x.size());
  for (size_t i = 0; i < x.size(); ++i) out.push_back(x[i] + y[i]);
  return out;
}

}  // namespace

AlgebraRef AlgebraSpec::m2(const RingSpec& ring) {
  auto s = std::shared_ptr<AlgebraSpec>(new AlgebraSpec(ring, AlgKind::m2));
  return s;
}

AlgebraRef AlgebraSpec::quaternion(const RingSpec& ring, RingElem a, RingElem b) {
  if (!ring.two_is_unit())
    fail(Errc::char_two, "QuaternionSC requires 2 to be a unit in " + ring.str());
  if (a.ring() != ring || b.ring() != ring)
    fail(Errc::ring_mismatch, "structure constants must live in " + ring.str());
  if (!a.is_unit()) fail(Errc::not_a_unit, "a = " + a.str() + " in " + ring.str());
  if (!b.is_unit()) fail(Errc::not_a_unit, "b = " + b.str() + " in " + ring.str());
  auto s = std::shared_ptr<AlgebraSpec>(new AlgebraSpec(ring, AlgKind::quaternion));
  s->params_ = {std::move(a), std::move(b)};
  return s;
}

AlgebraRef AlgebraSpec::zorn(const RingSpec& ring) {
  return std::shared_ptr<AlgebraSpec>(new AlgebraSpec(ring, AlgKind::zorn));
}

AlgebraRef AlgebraSpec::doubled(AlgebraRef base, RingElem lambda) {
  if (!base) fail(Errc::invalid_algebra, "doubled: null base");
  if (!base->is_associative())
    fail(Errc::invalid_algebra, "doubled base must be m2 or quaternion, got " + base->str());
  if (lambda.ring() != base->ring())
    fail(Errc::ring_mismatch, "lambda must live in " + base->ring().str());
  if (!lambda.is_unit()) fail(Errc::not_a_unit, "lambda = " + lambda.str());
  auto s = std::shared_ptr<AlgebraSpec>(new AlgebraSpec(base->ring(), AlgKind::doubled));
  s->params_ = {std::move(lambda)};
  s->base_ = std::move(base);
  return s;
}

const RingElem& AlgebraSpec::param_a() const {
  if (kind_ != AlgKind::quaternion) fail(Errc::spec_mismatch, "param_a on " + str());
  return params_[0];
}

const RingElem& AlgebraSpec::param_b() const {
  if (kind_ != AlgKind::quaternion) fail(Errc::spec_mismatch, "param_b on " + str());
  return params_[1];
}

const AlgebraRef& AlgebraSpec::base() const {
  if (kind_ != AlgKind::doubled) fail(Errc::spec_mismatch, "base on " + str());
  return base_;
}

const RingElem& AlgebraSpec::lambda() const {
  if (kind_ != AlgKind::doubled) fail(Errc::spec_mismatch, "lambda on " + str());
  return params_[0];
}

std::string AlgebraSpec::basis_name(int i) const {
  static const char* m2_names[] = {"E11", "E12", "E21", "E22"};
  static const char* quat_names[] = {"1", "i", "j", "ij"};
  static const char* zorn_names[] = {"d1", "d2", "u1", "u2", "u3", "w1", "w2", "w3"};
  switch (kind_) {
    case AlgKind::m2: return m2_names[i];
    case AlgKind::quaternion: return quat_names[i];
    case AlgKind::zorn: return zorn_names[i];
    case AlgKind::doubled:
      return i < 4 ? "(" + base_->basis_name(i) + ",0)"
                   : "(0," + base_->basis_name(i - 4) + ")";
  }
  return "?";
}

std::string AlgebraSpec::str() const {
  switch (kind_) {
    case AlgKind::m2: return "M2(" + ring_.str() + ")";
    case AlgKind::quaternion:
      return "Quat(" + ring_.str() + "; a=" + params_[0].str() + ", b=" + params_[1].str() + ")";
    case AlgKind::zorn: return "Zorn(" + ring_.str() + ")";
    case AlgKind::doubled:
      return "Doubled(" + base_->str() + "; lambda=" + params_[0].str() + ")";
  }
  return "?";
}

bool AlgebraSpec::operator==(const AlgebraSpec& b) const {
  if (kind_ != b.kind_ || !(ring_ == b.ring_)) return false;
  if (params_ != b.params_) return false;
  if (kind_ == AlgKind::doubled) return *base_ == *b.base_;
  return true;
}

AlgElem::AlgElem(AlgebraRef alg, std::vector<RingElem> coords)
    : alg_(std::move(alg)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != alg_->rank())
    fail(Errc::rank_mismatch, "expected " + std::to_string(alg_->rank()) +
                                  " coordinates, got " + std::to_string(coords_.size()));
  for (const auto& c : coords_)
    if (c.ring() != alg_->ring())
      fail(Errc::ring_mismatch, "coordinate in " + c.ring().str() + " for algebra over " +
                                    alg_->ring().str());
}

bool AlgElem::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const RingElem& c) { return c.is_zero(); });
}

std::string AlgElem::str() const {
  std::string s = "(";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += coords_[i].str();
  }
  return s + ")";
}

AlgElem operator+(const AlgElem& x, const AlgElem& y) {
  require_same_spec(x, y);
  return {x.algebra(), added(x.coords(), y.coords())};
}

AlgElem operator-(const AlgElem& x, const AlgElem& y) {
  require_same_spec(x, y);
  Coords out;
  out.reserve(x.coords().size());
  for (size_t i = 0; i < x.coords().size(); ++i)
    out.push_back(x.coords()[i] - y.coords()[i]);
  return {x.algebra(), std::move(out)};
}

AlgElem operator*(const RingElem& c, const AlgElem& x) {
  if (c.ring() != x.spec().ring())
    fail(Errc::ring_mismatch, "scalar in " + c.ring().str());
  return {x.algebra(), scaled(c, x.coords())};
}

AlgElem operator-(const AlgElem& x) {
  Coords out;
  out.reserve(x.coords().size());
  for (const auto& c : x.coords()) out.push_back(-c);
  return {x.algebra(), std::move(out)};
}

AlgElem operator*(const AlgElem& x, const AlgElem& y) {
  require_same_spec(x, y);
  const AlgebraSpec& A = x.spec();
  const Coords& u = x.coords();
  const Coords& v = y.coords();
  switch (A.kind()) {
    case AlgKind::m2:
    case AlgKind::quaternion:
      return {x.algebra(), mul4(A, u, v)};
    case AlgKind::zorn: {
      // [[a, v], [w, b]] * [[a', v'], [w', b']] =
      //   [[a a' + <v, w'>, a v' + b' v - w x w'],
      //    [a' w + b w' + v x v', b b' + <w, v'>]]
      auto dot = [](const Coords& p, size_t i, const Coords& q, size_t j) {
        return p[i] * q[j] + p[i + 1] * q[j + 1] + p[i + 2] * q[j + 2];
      };
      auto cross_k = [](const Coords& p, size_t i, const Coords& q, size_t j, int k) {
        // k-th component of (p_i, p_i+1, p_i+2) x (q_j, q_j+1, q_j+2)
        size_t k1 = (k + 1) % 3, k2 = (k + 2) % 3;
        return p[i + k1] * q[j + k2] - p[i + k2] * q[j + k1];
      };
      Coords out;
      out.reserve(8);
      out.push_back(u[0] * v[0] + dot(u, 2, v, 5));  // a a' + <v, w'>
      out.push_back(u[1] * v[1] + dot(u, 5, v, 2));  // b b' + <w, v'>
      for (int k = 0; k < 3; ++k)                    // a v' + b' v - w x w'
        out.push_back(u[0] * v[2 + k] + v[1] * u[2 + k] - cross_k(u, 5, v, 5, k));
      for (int k = 0; k < 3; ++k)                    // a' w + b w' + v x v'
        out.push_back(v[0] * u[5 + k] + u[1] * v[5 + k] + cross_k(u, 2, v, 2, k));
      return {x.algebra(), std::move(out)};
    }
    case AlgKind::doubled: {
      // (x1, y1) * (x2, y2) = (x1 x2 + lambda y2 sigma(y1), sigma(x1) y2 + x2 y1)
      const AlgebraSpec& B = *A.base();
      const RingElem& lam = A.lambda();
      Coords x1(u.begin(), u.begin() + 4), y1(u.begin() + 4, u.end());
      Coords x2(v.begin(), v.begin() + 4), y2(v.begin() + 4, v.end());
      Coords left = added(mul4(B, x1, x2), scaled(lam, mul4(B, y2, conj4(B, y1))));
      Coords right = added(mul4(B, conj4(B, x1), y2), mul4(B, x2, y1));
      Coords out = std::move(left);
      out.insert(out.end(), right.begin(), right.end());
      return {x.algebra(), std::move(out)};
    }
  }
  fail(Errc::spec_mismatch, "bad algebra kind");
}

bool AlgElem::operator==(const AlgElem& y) const {
  if (alg_ != y.alg_ && !(spec() == y.spec())) return false;
  return coords_ == y.coords_;
}

std::strong_ordering AlgElem::operator<=>(const AlgElem& y) const {
  require_same_spec(*this, y);
  for (size_t i = 0; i < coords_.size(); ++i) {
    auto c = coords_[i] <=> y.coords_[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

AlgElem alg_zero(const AlgebraRef& alg) {
  return {alg, Coords(alg->rank(), RingElem::zero(alg->ring()))};
}

AlgElem alg_one(const AlgebraRef& alg) {
  Coords c(alg->rank(), RingElem::zero(alg->ring()));
  RingElem one = RingElem::one(alg->ring());
  switch (alg->kind()) {
    case AlgKind::m2: c[0] = one; c[3] = one; break;
    case AlgKind::quaternion: c[0] = one; break;
    case AlgKind::zorn: c[0] = one; c[1] = one; break;
    case AlgKind::doubled:
      if (alg->base()->kind() == AlgKind::m2) { c[0] = one; c[3] = one; }
      else c[0] = one;
      break;
  }
  return {alg, std::move(c)};
}

AlgElem alg_basis(const AlgebraRef& alg, int i) {
  if (i < 0 || i >= alg->rank()) fail(Errc::rank_mismatch, "basis index " + std::to_string(i));
  Coords c(alg->rank(), RingElem::zero(alg->ring()));
  c[i] = RingElem::one(alg->ring());
  return {alg, std::move(c)};
}

AlgElem alg_scalar(const AlgebraRef& alg, const RingElem& c) { return c * alg_one(alg); }

RingElem trace(const AlgElem& x) {
  const AlgebraSpec& A = x.spec();
  switch (A.kind()) {
    case AlgKind::m2:
    case AlgKind::quaternion: return trace4(A, x.coords());
    case AlgKind::zorn: return x[0] + x[1];
    case AlgKind::doubled:
      return trace4(*A.base(), Coords(x.coords().begin(), x.coords().begin() + 4));
  }
  fail(Errc::spec_mismatch, "bad algebra kind");
}

AlgElem conj(const AlgElem& x) { return alg_scalar(x.algebra(), trace(x)) - x; }

RingElem norm(const AlgElem& x) {
  const AlgebraSpec& A = x.spec();
  switch (A.kind()) {
    case AlgKind::m2:
    case AlgKind::quaternion: return norm4(A, x.coords());
    case AlgKind::zorn:
      return x[0] * x[1] - x[2] * x[5] - x[3] * x[6] - x[4] * x[7];
    case AlgKind::doubled: {
      const AlgebraSpec& B = *A.base();
      Coords xs(x.coords().begin(), x.coords().begin() + 4);
      Coords ys(x.coords().begin() + 4, x.coords().end());
      return norm4(B, xs) - A.lambda() * norm4(B, ys);
    }
  }
  fail(Errc::spec_mismatch, "bad algebra kind");
}

bool alg_is_invertible(const AlgElem& x) { return norm(x).is_unit(); }

AlgElem alg_inverse(const AlgElem& x) {
  RingElem n = norm(x);
  if (!n.is_unit())
    fail(Errc::not_invertible, "norm = " + n.str() + " is not a unit in " + x.spec().ring().str());
  return n.inv() * conj(x);
}

std::vector<AlgElem> alg_enumerate(const AlgebraRef& alg) {
  auto elems = ring_enumerate(alg->ring());
  const size_t n = elems.size();
  const int rank = alg->rank();
  size_t total = 1;
  for (int i = 0; i < rank; ++i) total *= n;
  std::vector<AlgElem> out;
  out.reserve(total);
  std::vector<size_t> idx(rank, 0);
  for (size_t t = 0; t < total; ++t) {
    Coords c;
    c.reserve(rank);
    for (int i = 0; i < rank; ++i) c.push_back(elems[idx[i]]);
    out.emplace_back(alg, std::move(c));
    for (int i = rank - 1; i >= 0; --i) {  // last coordinate fastest
      if (++idx[i] < n) break;
      idx[i] = 0;
    }
  }
  return out;
}

Mat2 as_mat2(const AlgElem& x) {
  if (x.spec().kind() != AlgKind::m2)
    fail(Errc::spec_mismatch, "as_mat2 on " + x.spec().str());
  return {x[0], x[1], x[2], x[3]};
}

AlgElem from_mat2(const AlgebraRef& alg, const Mat2& m) {
  if (alg->kind() != AlgKind::m2) fail(Errc::spec_mismatch, "from_mat2 into " + alg->str());
  auto c = m.coords();
  return {alg, Coords(c.begin(), c.end())};
}

namespace {

AlgebraRef doubled_m2_one(const RingSpec& ring) {
  return AlgebraSpec::doubled(AlgebraSpec::m2(ring), RingElem::one(ring));
}

void require_zorn(const AlgElem& x) {
  if (x.spec().kind() != AlgKind::zorn)
    fail(Errc::spec_mismatch, "expected a Zorn element, got " + x.spec().str());
}

void require_doubled_m2_one(const AlgebraSpec& A) {
  if (A.kind() != AlgKind::doubled || A.base()->kind() != AlgKind::m2 ||
      !A.lambda().is_one())
    fail(Errc::spec_mismatch, "expected Doubled(M2; lambda=1), got " + A.str());
}

}  // namespace

AlgElem zorn_to_doubled(const AlgElem& x, const AlgebraRef& target) {
  require_zorn(x);
  require_doubled_m2_one(*target);
  if (target->ring() != x.spec().ring())
    fail(Errc::ring_mismatch, "target over " + target->ring().str());
  const Coords& c = x.coords();
  // X = [[a, v1], [w1, b]], Y = [[w3, w2], [-v2, v3]]
  return {target, {c[0], c[2], c[5], c[1], c[7], c[6], -c[3], c[4]}};
}

AlgElem zorn_to_doubled(const AlgElem& x) {
  require_zorn(x);
  return zorn_to_doubled(x, doubled_m2_one(x.spec().ring()));
}

AlgElem doubled_to_zorn(const AlgElem& x, const AlgebraRef& target) {
  require_doubled_m2_one(x.spec());
  if (target->kind() != AlgKind::zorn)
    fail(Errc::spec_mismatch, "expected a Zorn target, got " + target->str());
  if (target->ring() != x.spec().ring())
    fail(Errc::ring_mismatch, "target over " + target->ring().str());
  const Coords& c = x.coords();
  // (a, b, v1, v2, v3, w1, w2, w3) from X = (c0..c3), Y = (c4..c7)
  return {target, {c[0], c[3], c[1], -c[6], c[7], c[2], c[5], c[4]}};
}

AlgElem doubled_to_zorn(const AlgElem& x) {
  require_doubled_m2_one(x.spec());
  return doubled_to_zorn(x, AlgebraSpec::zorn(x.spec().ring()));
}

}  // namespace cayley
