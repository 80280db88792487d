#include "cayley/grouppoints.hpp"

#include <algorithm>
#include <stdexcept>

#include "cayley/f2fast.hpp"

namespace cayley {

namespace {

constexpr uint64_t kClosureLimit = 4'000'000;  // full closure up to this many products

bool is_f2(const RingSpec& r) {
  return r.kind() == RingKind::prime_field && r.modulus() == 2;
}

// Sorts the elements canonically and checks the group axioms: identity and
// all inverses always, closure fully up to kClosureLimit products and on a
// deterministic stride sample beyond.  A violation is a library bug, not a
// user error, hence logic_error.
template <class T, class Mul, class Inv>
GroupCheck verify_group(std::vector<T>& elems, const T& id, Mul&& mul, Inv&& inv) {
  std::sort(elems.begin(), elems.end());
  auto member = [&elems](const T& x) {
    return std::binary_search(elems.begin(), elems.end(), x);
  };
  if (!member(id)) throw std::logic_error("point set: identity missing");
  for (const auto& e : elems)
    if (!member(inv(e))) throw std::logic_error("point set: inverse missing");
  const uint64_t n = elems.size();
  const uint64_t pairs = n * n;
  if (pairs <= kClosureLimit) {
    for (const auto& a : elems)
      for (const auto& b : elems)
        if (!member(mul(a, b))) throw std::logic_error("point set: not closed");
    return GroupCheck::full;
  }
  const uint64_t step = pairs / kClosureLimit + 1;
  for (uint64_t k = 0; k < pairs; k += step)
    if (!member(mul(elems[static_cast<size_t>(k / n)], elems[static_cast<size_t>(k % n)])))
      throw std::logic_error("point set: not closed");
  return GroupCheck::sampled;
}

// F2 maps of dimension <= 8 get a complete bit-level check regardless of size.
GroupCheck verify_linmap_group(std::vector<LinMap>& elems) {
  std::sort(elems.begin(), elems.end());
  if (elems.empty()) throw std::logic_error("point set: empty");
  const RingSpec& R = elems.front().ring();
  const int n = elems.front().dim();
  if (is_f2(R) && n <= 8) {
    std::vector<uint64_t> keys;
    keys.reserve(elems.size());
    for (const auto& m : elems) keys.push_back(f2_pack(m));
    std::sort(keys.begin(), keys.end());
    if (!f2_group_closed(n, keys)) throw std::logic_error("point set: not closed");
    return GroupCheck::full;
  }
  return verify_group(
      elems, LinMap::identity(R, n), [](const LinMap& a, const LinMap& b) { return a * b; },
      [](const LinMap& a) { return a.inverse(); });
}

void require_associative(const AlgebraSpec& spec, const char* what) {
  if (!spec.is_associative())
    fail(Errc::non_associative_kind, std::string(what) + " on " + spec.str());
}

}  // namespace

PointSet sl1_elements(const AlgebraRef& alg) {
  std::vector<AlgElem> out;
  for (auto& x : alg_enumerate(alg))
    if (norm(x).is_one()) out.push_back(std::move(x));
  PointSet ps{"SL1", "norm-one elements of " + alg->str(), std::move(out),
              GroupCheck::none};
  if (alg->is_associative()) {
    auto& elems = std::get<std::vector<AlgElem>>(ps.elements);
    ps.verified = verify_group(
        elems, alg_one(alg), [](const AlgElem& a, const AlgElem& b) { return a * b; },
        [](const AlgElem& a) { return conj(a); });  // norm 1: inverse = conjugate
  }
  return ps;
}

PointSet mu2_elements(const RingSpec& ring) {
  std::vector<RingElem> out;
  for (auto& t : ring_enumerate(ring))
    if ((t * t).is_one()) out.push_back(std::move(t));
  PointSet ps{"MU2", "square roots of 1 in " + ring.str(), std::move(out),
              GroupCheck::none};
  auto& elems = std::get<std::vector<RingElem>>(ps.elements);
  ps.verified = verify_group(
      elems, RingElem::one(ring), [](const RingElem& a, const RingElem& b) { return a * b; },
      [](const RingElem& a) { return a; });  // t^2 = 1 means t is its own inverse
  return ps;
}

LinMap f_map(const AlgElem& x, const AlgElem& y) {
  require_same_spec(x, y);
  require_associative(x.spec(), "f_map");
  if (!norm(x).is_one()) fail(Errc::not_norm_one, "norm(x) = " + norm(x).str());
  if (!norm(y).is_one()) fail(Errc::not_norm_one, "norm(y) = " + norm(y).str());
  const AlgebraRef& alg = x.algebra();
  AlgElem yinv = conj(y);
  std::vector<std::vector<RingElem>> cols;
  cols.reserve(alg->rank());
  for (int i = 0; i < alg->rank(); ++i)
    cols.push_back(((x * alg_basis(alg, i)) * yinv).coords());
  LinMap g = LinMap::from_columns(alg->ring(), cols);
  // Verified postcondition: f(x, y) lands in SO of the norm form.
  QuadForm nf = form_from_algebra(alg);
  if (!(compose(nf, g) == nf))
    throw std::logic_error("f_map: image does not preserve the norm form");
  if (!g.det().is_one()) throw std::logic_error("f_map: image determinant is not 1");
  return g;
}

PointSet f_kernel(const AlgebraRef& alg, uint64_t budget) {
  require_associative(*alg, "f_kernel");
  auto sl1 = std::get<std::vector<AlgElem>>(sl1_elements(alg).elements);
  const uint64_t pairs = static_cast<uint64_t>(sl1.size()) * sl1.size();
  if (pairs > budget)
    fail(Errc::budget_exceeded, "f_kernel needs " + std::to_string(pairs) + " pair scans");
  LinMap id = LinMap::identity(alg->ring(), alg->rank());
  std::vector<std::pair<AlgElem, AlgElem>> kernel;
  for (const auto& x : sl1)
    for (const auto& y : sl1)
      if (f_map(x, y) == id) kernel.emplace_back(x, y);
  PointSet ps{"ker(f)", "pairs (x, y) with x q y^-1 = q on " + alg->str(),
              std::move(kernel), GroupCheck::none};
  auto& elems = std::get<std::vector<std::pair<AlgElem, AlgElem>>>(ps.elements);
  using P = std::pair<AlgElem, AlgElem>;
  ps.verified = verify_group(
      elems, P{alg_one(alg), alg_one(alg)},
      [](const P& a, const P& b) { return P{a.first * b.first, a.second * b.second}; },
      [](const P& a) { return P{conj(a.first), conj(a.second)}; });
  return ps;
}

PointSet f_image(const AlgebraRef& alg, uint64_t budget) {
  require_associative(*alg, "f_image");
  auto sl1 = std::get<std::vector<AlgElem>>(sl1_elements(alg).elements);
  const uint64_t pairs = static_cast<uint64_t>(sl1.size()) * sl1.size();
  if (pairs > budget)
    fail(Errc::budget_exceeded, "f_image needs " + std::to_string(pairs) + " pair scans");
  std::vector<LinMap> maps;
  maps.reserve(static_cast<size_t>(pairs));
  for (const auto& x : sl1)
    for (const auto& y : sl1) maps.push_back(f_map(x, y));
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  PointSet ps{"im(f)", "distinct maps q |-> x q y^-1 on " + alg->str(), std::move(maps),
              GroupCheck::none};
  ps.verified = verify_linmap_group(std::get<std::vector<LinMap>>(ps.elements));
  return ps;
}

AlgElem orbit_map_u(const LinMap& g, const AlgebraRef& alg) {
  if (g.dim() != alg->rank())
    fail(Errc::rank_mismatch, "map of dimension " + std::to_string(g.dim()) +
                                  " on algebra of rank " + std::to_string(alg->rank()));
  if (g.ring() != alg->ring())
    fail(Errc::ring_mismatch, "map over " + g.ring().str());
  return {alg, g.apply(alg_one(alg).coords())};
}

LinMap left_translation_s(const AlgElem& q) {
  require_associative(q.spec(), "left_translation_s");
  if (!norm(q).is_one()) fail(Errc::not_norm_one, "norm(q) = " + norm(q).str());
  const AlgebraRef& alg = q.algebra();
  std::vector<std::vector<RingElem>> cols;
  cols.reserve(alg->rank());
  for (int i = 0; i < alg->rank(); ++i)
    cols.push_back((q * alg_basis(alg, i)).coords());
  return LinMap::from_columns(alg->ring(), cols);
}

PointSet orthogonal_elements(const QuadForm& q, uint64_t budget) {
  Int card = q.ring().cardinality();  // InfiniteRing over Z, Q
  bool in_envelope = (q.rank() <= 4 && card <= 5) || (q.rank() <= 8 && card == 2);
  if (!in_envelope)
    fail(Errc::budget_exceeded,
         "orthogonal enumeration outside the enumerable envelope (rank " +
             std::to_string(q.rank()) + " over " + q.ring().str() + ")");
  std::vector<LinMap> elems = all_isometries(q, q, budget);
  PointSet ps{"O", "isometries of " + q.str() + " over " + q.ring().str(),
              std::move(elems), GroupCheck::none};
  ps.verified = verify_linmap_group(std::get<std::vector<LinMap>>(ps.elements));
  return ps;
}

PointSet so_elements(const QuadForm& q, uint64_t budget) {
  PointSet o = orthogonal_elements(q, budget);
  std::vector<LinMap> kept;
  for (const auto& g : std::get<std::vector<LinMap>>(o.elements))
    if (dickson(g, q) == 0) kept.push_back(g);
  PointSet ps{"SO", "dickson-0 isometries of " + q.str() + " over " + q.ring().str(),
              std::move(kept), GroupCheck::none};
  ps.verified = verify_linmap_group(std::get<std::vector<LinMap>>(ps.elements));
  return ps;
}

int dickson(const LinMap& g, const QuadForm& q) {
  if (!(compose(q, g) == q))
    fail(Errc::not_orthogonal, "map is not an isometry of " + q.str());
  const RingSpec& R = q.ring();
  if (R.two_is_unit()) {
    RingElem d = g.det();
    if (d.is_one()) return 0;
    if ((-d).is_one()) return 1;
    fail(Errc::unsupported_ring,
         "isometry determinant " + d.str() + " is neither 1 nor -1 in " + R.str());
  }
  if (R.kind() == RingKind::prime_field && R.modulus() == 2)
    return rank_over_field(g - LinMap::identity(R, g.dim())) % 2;
  fail(Errc::unsupported_ring, "dickson over " + R.str() + " (2 not a unit, not a char-2 field)");
}

LinMap canonical_involution_map(const AlgebraRef& alg) {
  std::vector<std::vector<RingElem>> cols;
  cols.reserve(alg->rank());
  for (int i = 0; i < alg->rank(); ++i)
    cols.push_back(conj(alg_basis(alg, i)).coords());
  return LinMap::from_columns(alg->ring(), cols);
}

bool is_algebra_automorphism(const AlgebraRef& alg, const LinMap& T) {
  if (T.dim() != alg->rank())
    fail(Errc::rank_mismatch, "map of dimension " + std::to_string(T.dim()) +
                                  " on algebra of rank " + std::to_string(alg->rank()));
  if (T.ring() != alg->ring()) fail(Errc::ring_mismatch, "map over " + T.ring().str());
  AlgElem one = alg_one(alg);
  if (!(AlgElem(alg, T.apply(one.coords())) == one)) return false;
  if (!T.det().is_unit()) return false;
  std::vector<AlgElem> images;
  images.reserve(alg->rank());
  for (int i = 0; i < alg->rank(); ++i)
    images.emplace_back(alg, T.apply(alg_basis(alg, i).coords()));
  for (int i = 0; i < alg->rank(); ++i)
    for (int j = 0; j < alg->rank(); ++j) {
      AlgElem lhs(alg, T.apply((alg_basis(alg, i) * alg_basis(alg, j)).coords()));
      if (!(lhs == images[i] * images[j])) return false;
    }
  return true;
}

LinMap phi_family(const AlgebraRef& alg, const Mat2& a, const Mat2& b) {
  if (alg->kind() != AlgKind::doubled || alg->base()->kind() != AlgKind::m2 ||
      !alg->lambda().is_one())
    fail(Errc::spec_mismatch, "phi_family lives on Doubled(M2; lambda=1), got " + alg->str());
  if (a.ring() != alg->ring() || b.ring() != alg->ring())
    fail(Errc::ring_mismatch, "matrices over " + a.ring().str());
  if (!det(a).is_one()) fail(Errc::not_norm_one, "det(a) = " + det(a).str());
  if (!det(b).is_one()) fail(Errc::not_norm_one, "det(b) = " + det(b).str());
  Mat2 ainv = conjugate(a);  // det 1: inverse = adjugate
  Mat2 binv = conjugate(b);
  const RingSpec& R = alg->ring();
  RingElem z = RingElem::zero(R);
  std::vector<std::vector<RingElem>> cols;
  cols.reserve(8);
  auto basis_mat = [&R, &z](int k) {
    std::array<RingElem, 4> c{z, z, z, z};
    c[k] = RingElem::one(R);
    return Mat2::from_coords(c);
  };
  for (int k = 0; k < 4; ++k) {
    auto img = ((a * basis_mat(k)) * ainv).coords();
    cols.push_back({img[0], img[1], img[2], img[3], z, z, z, z});
  }
  for (int k = 0; k < 4; ++k) {
    auto img = ((a * basis_mat(k)) * binv).coords();
    cols.push_back({z, z, z, z, img[0], img[1], img[2], img[3]});
  }
  return LinMap::from_columns(R, cols);
}

namespace {

// Row-major bit key with entry (0,0) most significant, so ascending integer
// order equals the canonical LinMap order (entry-lex, 0 < 1).
uint64_t row_lex_key(int n, uint64_t colkey) {
  uint64_t out = 0;
  for (int j = 0; j < n; ++j) {
    auto col = static_cast<unsigned>((colkey >> (8 * j)) & 0xff);
    for (int i = 0; i < n; ++i)
      if (col & (1u << i)) out |= uint64_t{1} << (63 - (8 * i + j));
  }
  return out;
}

}  // namespace

AutResult aut_enumerate(const AlgebraRef& alg, uint64_t budget) {
  if (!is_f2(alg->ring()))
    fail(Errc::unsupported_ring, "aut_enumerate over " + alg->ring().str());
  bool doubled = alg->kind() == AlgKind::doubled;
  if (alg->kind() != AlgKind::zorn &&
      !(doubled && alg->base()->kind() == AlgKind::m2 && alg->lambda().is_one()))
    fail(Errc::unsupported_ring, "aut_enumerate on " + alg->str());
  const RingSpec& R = alg->ring();
  AlgebraRef zalg = doubled ? AlgebraSpec::zorn(R) : alg;
  F2Table tbl = f2_table(zalg);
  const unsigned count = tbl.count;  // 256

  uint64_t work = 0;
  auto charge = [&work, budget](uint64_t amount) {
    work += amount;
    if (work > budget)
      fail(Errc::budget_exceeded, "aut_enumerate exceeded budget of " + std::to_string(budget));
  };

  // An automorphism is fixed by the images of the generators d1, u1, u2, u3:
  // d2 = 1 - d1 and w1 = u2 u3, w2 = u3 u1, w3 = u1 u2.  Each filter below is
  // a relation satisfied by the generators, hence necessary for the image.
  auto is_aut_key = [&](uint64_t key) {
    if (f2_inverse(8, key) == 0) return false;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        unsigned lhs = f2_apply(8, key, tbl.mul_at(1u << i, 1u << j));
        unsigned rhs = tbl.mul_at(f2_apply(8, key, 1u << i), f2_apply(8, key, 1u << j));
        if (lhs != rhs) return false;
      }
    return true;
  };

  std::vector<uint64_t> keys;
  std::vector<unsigned> idempotents;
  for (unsigned m = 1; m < count; ++m) {
    charge(1);
    if (tbl.mul_at(m, m) == m && tbl.trc[m] == 1 && tbl.nrm[m] == 0)
      idempotents.push_back(m);
  }
  for (unsigned E : idempotents) {
    std::vector<unsigned> U;  // candidate images of u1, u2, u3 relative to E
    for (unsigned x = 1; x < count; ++x) {
      charge(1);
      if (tbl.mul_at(E, x) == x && tbl.mul_at(x, E) == 0 && tbl.mul_at(x, x) == 0 &&
          tbl.trc[x] == 0 && tbl.nrm[x] == 0)
        U.push_back(x);
    }
    for (unsigned x1 : U)
      for (unsigned x2 : U) {
        if (x2 == x1) continue;
        for (unsigned x3 : U) {
          if (x3 == x1 || x3 == x2 || x3 == (x1 ^ x2)) continue;
          charge(1);
          uint64_t key = 0;
          unsigned cols[8] = {E,
                              tbl.one ^ E,
                              x1,
                              x2,
                              x3,
                              tbl.mul_at(x2, x3),
                              tbl.mul_at(x3, x1),
                              tbl.mul_at(x1, x2)};
          for (int j = 0; j < 8; ++j) key |= uint64_t{cols[j]} << (8 * j);
          if (is_aut_key(key)) keys.push_back(key);
        }
      }
  }

  if (doubled) {
    // Transport through the structural isomorphism Zorn -> Doubled(M2, 1).
    std::vector<std::vector<RingElem>> cols;
    for (int i = 0; i < 8; ++i)
      cols.push_back(zorn_to_doubled(alg_basis(zalg, i), alg).coords());
    uint64_t phi = f2_pack(LinMap::from_columns(R, cols));
    uint64_t phi_inv = f2_inverse(8, phi);
    for (auto& k : keys) k = f2_compose(8, f2_compose(8, phi, k), phi_inv);
  }

  std::vector<uint64_t> sorted_keys = keys;
  std::sort(sorted_keys.begin(), sorted_keys.end());
  if (std::adjacent_find(sorted_keys.begin(), sorted_keys.end()) != sorted_keys.end())
    throw std::logic_error("aut_enumerate: duplicate element");
  if (!f2_group_closed(8, sorted_keys))
    throw std::logic_error("aut_enumerate: group axioms failed");

  std::vector<std::pair<uint64_t, uint64_t>> order_keys;  // (canonical, packed)
  order_keys.reserve(keys.size());
  for (uint64_t k : keys) order_keys.emplace_back(row_lex_key(8, k), k);
  std::sort(order_keys.begin(), order_keys.end());
  std::vector<LinMap> elems;
  elems.reserve(order_keys.size());
  for (const auto& [rk, k] : order_keys) elems.push_back(f2_unpack(R, 8, k));

  PointSet ps{"AUT", "algebra automorphisms of " + alg->str(), std::move(elems),
              GroupCheck::full};
  return {ps.size(), std::move(ps)};
}

}  // namespace cayley
