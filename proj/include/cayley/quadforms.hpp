#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cayley/algebras.hpp"
#include "cayley/linmap.hpp"

namespace cayley {

// Quadratic form q(x) = sum_{i <= j} c_ij x_i x_j over one of the supported
// rings, stored as the upper-triangular coefficient vector.
class QuadForm {
 public:
  QuadForm(RingSpec ring, int rank);  // zero form
  static QuadForm diagonal(const RingSpec& ring, std::vector<RingElem> entries);

  int rank() const { return rank_; }
  const RingSpec& ring() const { return ring_; }
  const RingElem& coeff(int i, int j) const { return c_[index(i, j)]; }
  void set_coeff(int i, int j, RingElem c);
  RingElem eval(const std::vector<RingElem>& v) const;
  std::string str() const;
  bool operator==(const QuadForm& b) const {
    return ring_ == b.ring_ && rank_ == b.rank_ && c_ == b.c_;
  }

 private:
  size_t index(int i, int j) const;
  RingSpec ring_;
  int rank_;
  std::vector<RingElem> c_;
};

// The norm form of a composition algebra in its canonical basis, extracted
// by polarization: c_ii = n(e_i), c_ij = n(e_i + e_j) - n(e_i) - n(e_j).
QuadForm form_from_algebra(const AlgebraRef& alg);

// Polar matrix M with M_ii = 2 c_ii and M_ij = M_ji = c_ij; the associated
// bilinear form is b(x, y) = x^T M y = q(x + y) - q(x) - q(y).
LinMap polar_matrix(const QuadForm& q);
RingElem polar_eval(const QuadForm& q, const std::vector<RingElem>& x,
                    const std::vector<RingElem>& y);

// Nonsingular (regular) means det of the polar matrix is a unit.
bool is_nonsingular(const QuadForm& q);

// The substituted form v |-> q(T v).
QuadForm compose(const QuadForm& q, const LinMap& T);

// Fiber sizes |{v : q(v) = c}| over a finite ring; keys cover every attained
// value; counts sum to |R|^rank.  Throws BudgetExceeded if |R|^rank > budget.
std::map<RingElem, uint64_t> representation_counts(const QuadForm& q,
                                                   uint64_t budget = UINT64_MAX);

// Diagonalization by congruence: q(T v) = sum d_i v_i^2 with T invertible.
// Requires 2 a unit (CharTwo); throws Singular when no unit pivot can be
// produced for a nonzero residual block.
struct Diagonalization {
  QuadForm form;   // the diagonal form
  LinMap transform;  // q(transform v) = form(v)
};
Diagonalization diagonalize(const QuadForm& q);

// Isotropy with certificates.  Over finite rings the verdict is exact
// (exhaustive scan).  Over Q (and Z, which reduces to Q): "isotropic" always
// carries a checked nonzero witness; "anisotropic" only when the
// diagonalization is definite; otherwise "unknown".
struct IsotropyResult {
  enum class Verdict { isotropic, anisotropic, unknown };
  Verdict verdict;
  std::optional<std::vector<RingElem>> witness;  // nonzero v with q(v) = 0
};
IsotropyResult is_isotropic(const QuadForm& q);

// Invertible T with q2(T v) = q1(v), by backtracking over candidate basis
// images in ring enumeration order; the first isometry in that order is
// returned.  Finite rings only.  Candidate tests are charged against the
// budget (BudgetExceeded).
std::optional<LinMap> find_isometry(const QuadForm& q1, const QuadForm& q2,
                                    uint64_t budget = UINT64_MAX);

// Every isometry q1 -> q2, sorted in canonical (entry-lexicographic) order.
std::vector<LinMap> all_isometries(const QuadForm& q1, const QuadForm& q2,
                                   uint64_t budget = UINT64_MAX);

// All coordinate vectors of length n over a finite ring, ascending
// lexicographic (last coordinate fastest).
std::vector<std::vector<RingElem>> all_vectors(const RingSpec& ring, int n);

}  // namespace cayley
