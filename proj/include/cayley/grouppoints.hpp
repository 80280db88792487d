#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cayley/algebras.hpp"
#include "cayley/linmap.hpp"
#include "cayley/quadforms.hpp"

namespace cayley {

// How the group axioms (identity, inverses, closure) were machine-checked
// when the set was built: fully, or closure on a deterministic sample of
// products (identity/inverse checks are always complete), or not at all
// (octonion norm-one sets, which are not groups).
enum class GroupCheck { none, sampled, full };

struct PointSet {
  std::string which;        // "SL1", "MU2", "O", "SO", "AUT", "ker(f)", "im(f)"
  std::string description;  // human-readable: group of what, over what
  std::variant<std::vector<RingElem>, std::vector<AlgElem>,
               std::vector<std::pair<AlgElem, AlgElem>>, std::vector<LinMap>>
      elements;
  GroupCheck verified = GroupCheck::none;

  size_t size() const {
    return std::visit([](const auto& v) { return v.size(); }, elements);
  }
};

inline constexpr uint64_t kDefaultBudget = 20'000'000;

// Norm-one elements; a verified group for associative kinds, a bare set for
// octonion kinds.
PointSet sl1_elements(const AlgebraRef& alg);

// {t : t^2 = 1} in a finite ring, ascending.
PointSet mu2_elements(const RingSpec& ring);

// f(x, y): q |-> x q y^-1 for norm-one x, y in an associative algebra.
// The result is checked to preserve the norm form and to have det = 1.
LinMap f_map(const AlgElem& x, const AlgElem& y);

// All (x, y) in SL1 x SL1 with f(x, y) = id, as ordered pairs.
PointSet f_kernel(const AlgebraRef& alg, uint64_t budget = kDefaultBudget);

// The distinct maps {f(x, y)}, canonically ordered.
PointSet f_image(const AlgebraRef& alg, uint64_t budget = kDefaultBudget);

// The orbit map u: g |-> g.1.
AlgElem orbit_map_u(const LinMap& g, const AlgebraRef& alg);

// The section s: q |-> L_q (left translation) for norm-one q, associative kind.
LinMap left_translation_s(const AlgElem& q);

// O(q)(R) by constrained backtracking (all invertible T with q of T = q).
// Enumerable envelope: rank <= 4 with |R| <= 5, or rank <= 8 with |R| = 2.
PointSet orthogonal_elements(const QuadForm& q, uint64_t budget = kDefaultBudget);

// Kernel of the Dickson invariant inside orthogonal_elements(q).
PointSet so_elements(const QuadForm& q, uint64_t budget = kDefaultBudget);

// Dickson invariant of an isometry g of q: det-based when 2 is a unit,
// rank(g - id) mod 2 over fields of characteristic 2.
int dickson(const LinMap& g, const QuadForm& q);

// Matrix of the canonical involution x |-> trace(x) 1 - x.
LinMap canonical_involution_map(const AlgebraRef& alg);

// T invertible, T(1) = 1 and T(e_i e_j) = T(e_i) T(e_j) on all basis pairs.
bool is_algebra_automorphism(const AlgebraRef& alg, const LinMap& T);

// phi_{a,b}: (X, Y) |-> (a X a^-1, a Y b^-1) on Doubled(M2, 1), for
// det(a) = det(b) = 1.
LinMap phi_family(const AlgebraRef& alg, const Mat2& a, const Mat2& b);

// Complete enumeration of Aut(C)(F2) for C = Zorn or Doubled(M2, 1) over F2,
// by backtracking over the images of the generating set {d1, u1, u2, u3}
// (transported through the structural isomorphism in the doubled case).
struct AutResult {
  uint64_t order;
  PointSet set;  // verified = full (identity, inverses, 12,096^2 closure)
};
AutResult aut_enumerate(const AlgebraRef& alg, uint64_t budget = kDefaultBudget);

}  // namespace cayley
