#include "cayley/quadforms.hpp"

#include <algorithm>

namespace cayley {

QuadForm::QuadForm(RingSpec ring, int rank)
    : ring_(std::move(ring)), rank_(rank),
      c_(static_cast<size_t>(rank) * (rank + 1) / 2, RingElem::zero(ring_)) {
  if (rank < 1 || rank > 12) fail(Errc::rank_mismatch, "rank " + std::to_string(rank));
}

QuadForm QuadForm::diagonal(const RingSpec& ring, std::vector<RingElem> entries) {
  QuadForm q(ring, static_cast<int>(entries.size()));
  for (int i = 0; i < q.rank(); ++i) q.set_coeff(i, i, std::move(entries[i]));
  return q;
}

size_t QuadForm::index(int i, int j) const {
  if (i > j || i < 0 || j >= rank_) fail(Errc::rank_mismatch, "coefficient index");
  // row i starts after rank + (rank-1) + ... + (rank-i+1) entries
  return static_cast<size_t>(i) * rank_ - static_cast<size_t>(i) * (i - 1) / 2 + (j - i);
}

void QuadForm::set_coeff(int i, int j, RingElem c) {
  if (c.ring() != ring_) fail(Errc::ring_mismatch, "coefficient ring");
  c_[index(i, j)] = std::move(c);
}

RingElem QuadForm::eval(const std::vector<RingElem>& v) const {
  if (static_cast<int>(v.size()) != rank_)
    fail(Errc::rank_mismatch, "vector of dimension " + std::to_string(v.size()));
  RingElem acc = RingElem::zero(ring_);
  for (int i = 0; i < rank_; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = i; j < rank_; ++j) {
      const RingElem& c = coeff(i, j);
      if (c.is_zero()) continue;
      acc += c * v[i] * v[j];
    }
  }
  return acc;
}

std::string QuadForm::str() const {
  std::string s;
  for (int i = 0; i < rank_; ++i)
    for (int j = i; j < rank_; ++j) {
      const RingElem& c = coeff(i, j);
      if (c.is_zero()) continue;
      if (!s.empty()) s += " + ";
      std::string mono = i == j ? "x" + std::to_string(i) + "^2"
                                : "x" + std::to_string(i) + " x" + std::to_string(j);
      s += c.is_one() ? mono : c.str() + " " + mono;
    }
  return s.empty() ? "0" : s;
}

QuadForm form_from_algebra(const AlgebraRef& alg) {
  const int n = alg->rank();
  QuadForm q(alg->ring(), n);
  std::vector<RingElem> diag;
  for (int i = 0; i < n; ++i) {
    diag.push_back(norm(alg_basis(alg, i)));
    q.set_coeff(i, i, diag[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RingElem c = norm(alg_basis(alg, i) + alg_basis(alg, j)) - diag[i] - diag[j];
      q.set_coeff(i, j, std::move(c));
    }
  return q;
}

LinMap polar_matrix(const QuadForm& q) {
  LinMap m(q.ring(), q.rank());
  for (int i = 0; i < q.rank(); ++i) {
    m.at(i, i) = q.coeff(i, i) + q.coeff(i, i);
    for (int j = i + 1; j < q.rank(); ++j) m.at(i, j) = m.at(j, i) = q.coeff(i, j);
  }
  return m;
}

RingElem polar_eval(const QuadForm& q, const std::vector<RingElem>& x,
                    const std::vector<RingElem>& y) {
  std::vector<RingElem> sum;
  sum.reserve(x.size());
  for (size_t i = 0; i < x.size(); ++i) sum.push_back(x[i] + y[i]);
  return q.eval(sum) - q.eval(x) - q.eval(y);
}

bool is_nonsingular(const QuadForm& q) { return polar_matrix(q).det().is_unit(); }

QuadForm compose(const QuadForm& q, const LinMap& T) {
  if (q.ring() != T.ring()) fail(Errc::ring_mismatch, "form and map rings differ");
  if (q.rank() != T.dim()) fail(Errc::rank_mismatch, "form and map dimensions differ");
  const int n = q.rank();
  QuadForm out(q.ring(), n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const RingElem& c = q.coeff(i, j);
      if (c.is_zero()) continue;
      // c * (T v)_i (T v)_j contributes to every monomial v_k v_l
      for (int k = 0; k < n; ++k) {
        RingElem ck = out.coeff(k, k) + c * T.at(i, k) * T.at(j, k);
        out.set_coeff(k, k, std::move(ck));
        for (int l = k + 1; l < n; ++l) {
          RingElem cl = out.coeff(k, l) +
                        c * (T.at(i, k) * T.at(j, l) + T.at(i, l) * T.at(j, k));
          out.set_coeff(k, l, std::move(cl));
        }
      }
    }
  return out;
}

std::vector<std::vector<RingElem>> all_vectors(const RingSpec& ring, int n) {
  auto elems = ring_enumerate(ring);
  size_t total = 1;
  for (int i = 0; i < n; ++i) total *= elems.size();
  std::vector<std::vector<RingElem>> out;
  out.reserve(total);
  std::vector<size_t> idx(n, 0);
  for (size_t t = 0; t < total; ++t) {
    std::vector<RingElem> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.push_back(elems[idx[i]]);
    out.push_back(std::move(v));
    for (int i = n - 1; i >= 0; --i) {
      if (++idx[i] < elems.size()) break;
      idx[i] = 0;
    }
  }
  return out;
}

std::map<RingElem, uint64_t> representation_counts(const QuadForm& q, uint64_t budget) {
  Int card = q.ring().cardinality();
  Int total = 1;
  for (int i = 0; i < q.rank(); ++i) total *= card;
  if (total > budget)
    fail(Errc::budget_exceeded, "representation_counts needs " + total.str() +
                                    " evaluations, budget " + std::to_string(budget));
  std::map<RingElem, uint64_t> counts;
  for (const auto& v : all_vectors(q.ring(), q.rank())) ++counts[q.eval(v)];
  return counts;
}

Diagonalization diagonalize(const QuadForm& q) {
  const RingSpec& R = q.ring();
  if (!R.two_is_unit()) fail(Errc::char_two, "diagonalize over " + R.str());
  const int n = q.rank();
  RingElem half = RingElem(R, 2).inv();
  // B = polar/2, so q(x) = x^T B x with B symmetric; congruence ops keep
  // q(T v) = v^T B v in sync.
  LinMap B = polar_matrix(q);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) B.at(i, j) = half * B.at(i, j);
  LinMap T = LinMap::identity(R, n);

  auto swap_cols = [&](int a, int b) {
    for (int i = 0; i < n; ++i) std::swap(B.at(i, a), B.at(i, b));
    for (int j = 0; j < n; ++j) std::swap(B.at(a, j), B.at(b, j));
    for (int i = 0; i < n; ++i) std::swap(T.at(i, a), T.at(i, b));
  };
  // basis change e_a <- e_a + c e_b: column a += c * column b (and row a)
  auto add_col = [&](int a, int b, const RingElem& c) {
    for (int i = 0; i < n; ++i) B.at(i, a) += c * B.at(i, b);
    for (int j = 0; j < n; ++j) B.at(a, j) += c * B.at(b, j);
    for (int i = 0; i < n; ++i) T.at(i, a) += c * T.at(i, b);
  };

  RingElem two(R, 2);
  for (int p = 0; p < n; ++p) {
    bool row_zero = true;
    for (int j = p + 1; j < n; ++j)
      if (!B.at(p, j).is_zero()) { row_zero = false; break; }
    if (row_zero) continue;  // nothing to clear; the diagonal entry stays
    if (!B.at(p, p).is_unit()) {
      int pick = -1;
      for (int j = p + 1; j < n; ++j)
        if (B.at(j, j).is_unit()) { pick = j; break; }
      if (pick >= 0) {
        swap_cols(p, pick);
      } else {
        int addj = -1;
        for (int j = p + 1; j < n; ++j) {
          RingElem cand = B.at(p, p) + two * B.at(p, j) + B.at(j, j);
          if (cand.is_unit()) { addj = j; break; }
        }
        if (addj < 0)
          fail(Errc::singular, "no unit pivot at index " + std::to_string(p) +
                                   " while diagonalizing " + q.str());
        add_col(p, addj, RingElem::one(R));
      }
    }
    RingElem pinv = B.at(p, p).inv();
    for (int j = p + 1; j < n; ++j) {
      if (B.at(p, j).is_zero()) continue;
      add_col(j, p, -(pinv * B.at(p, j)));
    }
  }

  std::vector<RingElem> diag;
  for (int i = 0; i < n; ++i) diag.push_back(B.at(i, i));
  Diagonalization result{QuadForm::diagonal(R, std::move(diag)), T};
  if (!(compose(q, result.transform) == result.form))
    fail(Errc::singular, "diagonalization self-check failed");
  return result;
}

namespace {

// Rational square root of a canonical non-negative fraction, if exact.
std::optional<RingElem> rational_sqrt(const RingElem& r) {
  if (r.num() < 0) return std::nullopt;
  Int ns = boost::multiprecision::sqrt(r.num());
  Int ds = boost::multiprecision::sqrt(r.den());
  if (ns * ns != r.num() || ds * ds != r.den()) return std::nullopt;
  return RingElem::fraction(r.ring(), ns, ds);
}

IsotropyResult isotropic_finite(const QuadForm& q) {
  auto vectors = all_vectors(q.ring(), q.rank());
  for (const auto& v : vectors) {
    bool zero = std::all_of(v.begin(), v.end(), [](const RingElem& c) { return c.is_zero(); });
    if (zero) continue;
    if (q.eval(v).is_zero())
      return {IsotropyResult::Verdict::isotropic, v};
  }
  return {IsotropyResult::Verdict::anisotropic, std::nullopt};
}

IsotropyResult isotropic_rational(const QuadForm& q) {
  const RingSpec& R = q.ring();
  auto [diag, T] = diagonalize(q);
  const int n = q.rank();
  auto unit_vec = [&](int i) {
    std::vector<RingElem> v(n, RingElem::zero(R));
    v[i] = RingElem::one(R);
    return v;
  };
  auto witness_from = [&](const std::vector<RingElem>& v) -> IsotropyResult {
    std::vector<RingElem> w = T.apply(v);
    bool zero = std::all_of(w.begin(), w.end(), [](const RingElem& c) { return c.is_zero(); });
    if (zero || !q.eval(w).is_zero())
      fail(Errc::singular, "isotropy witness failed re-validation");
    return {IsotropyResult::Verdict::isotropic, w};
  };
  for (int i = 0; i < n; ++i)
    if (diag.coeff(i, i).is_zero()) return witness_from(unit_vec(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // d_i x^2 + d_j = 0 has the solution x = sqrt(-d_j / d_i) when exact
      RingElem ratio = -(diag.coeff(j, j) * diag.coeff(i, i).inv());
      if (auto x = rational_sqrt(ratio)) {
        auto v = unit_vec(i);
        v[i] = *x;
        v[j] = RingElem::one(R);
        return witness_from(v);
      }
    }
  bool all_pos = true, all_neg = true;
  for (int i = 0; i < n; ++i) {
    if (diag.coeff(i, i).num() > 0) all_neg = false;
    if (diag.coeff(i, i).num() < 0) all_pos = false;
  }
  if (all_pos || all_neg) return {IsotropyResult::Verdict::anisotropic, std::nullopt};
  return {IsotropyResult::Verdict::unknown, std::nullopt};
}

}  // namespace

IsotropyResult is_isotropic(const QuadForm& q) {
  switch (q.ring().kind()) {
    case RingKind::mod_ring:
    case RingKind::prime_field:
      return isotropic_finite(q);
    case RingKind::rationals:
      return isotropic_rational(q);
    case RingKind::integers: {
      // Isotropy over Z is equivalent to isotropy over Q; clear denominators.
      RingSpec Q = RingSpec::rationals();
      QuadForm qq(Q, q.rank());
      for (int i = 0; i < q.rank(); ++i)
        for (int j = i; j < q.rank(); ++j)
          qq.set_coeff(i, j, RingElem(Q, q.coeff(i, j).num()));
      IsotropyResult r = isotropic_rational(qq);
      if (r.verdict != IsotropyResult::Verdict::isotropic) return {r.verdict, std::nullopt};
      Int lcm = 1;
      for (const auto& c : *r.witness) lcm = boost::multiprecision::lcm(lcm, c.den());
      std::vector<RingElem> w;
      for (const auto& c : *r.witness) w.emplace_back(q.ring(), c.num() * (lcm / c.den()));
      if (!q.eval(w).is_zero()) fail(Errc::singular, "integral witness failed re-validation");
      return {IsotropyResult::Verdict::isotropic, std::move(w)};
    }
  }
  fail(Errc::unsupported_ring, "is_isotropic");
}

namespace {

struct IsometrySearch {
  const QuadForm& q1;
  const QuadForm& q2;
  const int n;
  std::vector<std::vector<RingElem>> vectors;
  std::vector<RingElem> qvals;
  LinMap polar2;
  uint64_t budget;
  uint64_t tested = 0;
  std::vector<size_t> chosen;                       // indices into vectors
  std::vector<std::vector<RingElem>> polar_rows;    // polar2 * t_j for chosen j
  std::vector<std::vector<size_t>> level_candidates;  // {v : q2(v) = q1_ii}
  bool stop_at_first;
  std::vector<LinMap> found;

  IsometrySearch(const QuadForm& a, const QuadForm& b, uint64_t budget_, bool first)
      : q1(a), q2(b), n(a.rank()), polar2(polar_matrix(b)), budget(budget_),
        stop_at_first(first) {
    if (a.ring() != b.ring()) fail(Errc::ring_mismatch, "forms over different rings");
    if (a.rank() != b.rank()) fail(Errc::rank_mismatch, "forms of different rank");
    vectors = all_vectors(a.ring(), n);
    qvals.reserve(vectors.size());
    for (const auto& v : vectors) qvals.push_back(q2.eval(v));
    level_candidates.resize(n);
    for (int i = 0; i < n; ++i) {
      const RingElem& want = q1.coeff(i, i);
      for (size_t k = 0; k < vectors.size(); ++k) {
        // a zero column can never occur in an invertible matrix
        bool zero = std::all_of(vectors[k].begin(), vectors[k].end(),
                                [](const RingElem& c) { return c.is_zero(); });
        if (!zero && qvals[k] == want) level_candidates[i].push_back(k);
      }
    }
  }

  void charge() {
    if (++tested > budget)
      fail(Errc::budget_exceeded, "isometry search exceeded budget of " +
                                      std::to_string(budget) + " candidate tests");
  }

  bool extend(int level) {
    if (level == n) {
      std::vector<std::vector<RingElem>> cols;
      cols.reserve(n);
      for (size_t k : chosen) cols.push_back(vectors[k]);
      LinMap T = LinMap::from_columns(q1.ring(), cols);
      if (!T.det().is_unit()) return false;
      found.push_back(std::move(T));
      return stop_at_first;
    }
    for (size_t k : level_candidates[level]) {
      charge();
      const auto& v = vectors[k];
      bool ok = true;
      for (int j = 0; j < level; ++j) {
        RingElem dot = RingElem::zero(q1.ring());
        for (int i = 0; i < n; ++i) dot += v[i] * polar_rows[j][i];
        if (!(dot == q1.coeff(j, level))) { ok = false; break; }
      }
      if (!ok) continue;
      chosen.push_back(k);
      polar_rows.push_back(polar2.apply(v));
      bool done = extend(level + 1);
      chosen.pop_back();
      polar_rows.pop_back();
      if (done) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<LinMap> find_isometry(const QuadForm& q1, const QuadForm& q2,
                                    uint64_t budget) {
  IsometrySearch s(q1, q2, budget, true);
  s.extend(0);
  if (s.found.empty()) return std::nullopt;
  return s.found.front();
}

std::vector<LinMap> all_isometries(const QuadForm& q1, const QuadForm& q2,
                                   uint64_t budget) {
  IsometrySearch s(q1, q2, budget, false);
  s.extend(0);
  std::sort(s.found.begin(), s.found.end());
  return std::move(s.found);
}

}  // namespace cayley
