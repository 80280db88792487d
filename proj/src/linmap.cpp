#include "cayley/linmap.hpp"

#include <bit>

namespace cayley {

LinMap::LinMap(RingSpec ring, int n)
    : ring_(std::move(ring)), n_(n),
      e_(static_cast<size_t>(n) * n, RingElem::zero(ring_)) {
  if (n < 1 || n > 12) fail(Errc::rank_mismatch, "dimension " + std::to_string(n));
}

LinMap LinMap::identity(const RingSpec& ring, int n) {
  LinMap m(ring, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RingElem::one(ring);
  return m;
}

LinMap LinMap::from_columns(const RingSpec& ring,
                            const std::vector<std::vector<RingElem>>& cols) {
  int n = static_cast<int>(cols.size());
  LinMap m(ring, n);
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(cols[j].size()) != n)
      fail(Errc::rank_mismatch, "column " + std::to_string(j));
    for (int i = 0; i < n; ++i) {
      if (cols[j][i].ring() != ring) fail(Errc::ring_mismatch, "column entry");
      m.at(i, j) = cols[j][i];
    }
  }
  return m;
}

std::vector<RingElem> LinMap::column(int j) const {
  std::vector<RingElem> out;
  out.reserve(n_);
  for (int i = 0; i < n_; ++i) out.push_back(at(i, j));
  return out;
}

std::vector<RingElem> LinMap::apply(const std::vector<RingElem>& v) const {
  if (static_cast<int>(v.size()) != n_)
    fail(Errc::rank_mismatch, "vector of dimension " + std::to_string(v.size()));
  std::vector<RingElem> out;
  out.reserve(n_);
  for (int i = 0; i < n_; ++i) {
    RingElem acc = RingElem::zero(ring_);
    for (int j = 0; j < n_; ++j) acc += at(i, j) * v[j];
    out.push_back(std::move(acc));
  }
  return out;
}

LinMap operator*(const LinMap& a, const LinMap& b) {
  require_same_space(a, b);
  LinMap out(a.ring(), a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      RingElem acc = RingElem::zero(a.ring());
      for (int k = 0; k < a.dim(); ++k) acc += a.at(i, k) * b.at(k, j);
      out.at(i, j) = std::move(acc);
    }
  return out;
}

LinMap operator+(const LinMap& a, const LinMap& b) {
  require_same_space(a, b);
  LinMap out(a.ring(), a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

LinMap operator-(const LinMap& a, const LinMap& b) {
  require_same_space(a, b);
  LinMap out(a.ring(), a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
  return out;
}

std::strong_ordering LinMap::operator<=>(const LinMap& b) const {
  require_same_space(*this, b);
  for (size_t k = 0; k < e_.size(); ++k) {
    auto c = e_[k] <=> b.e_[k];
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

RingElem LinMap::det() const {
  // dp[mask] = determinant of the submatrix on rows 0..popcount(mask)-1 and
  // the column set `mask`, built by Laplace expansion along the last row.
  const int n = n_;
  const size_t full = size_t{1} << n;
  std::vector<RingElem> dp(full, RingElem::zero(ring_));
  dp[0] = RingElem::one(ring_);
  for (size_t mask = 1; mask < full; ++mask) {
    int k = std::popcount(mask);
    int row = k - 1;
    bool plus = (k - 1) % 2 == 0;  // sign of the first (lowest-column) term
    RingElem acc = RingElem::zero(ring_);
    for (int j = 0; j < n; ++j) {
      size_t bit = size_t{1} << j;
      if (!(mask & bit)) continue;
      RingElem term = at(row, j) * dp[mask ^ bit];
      if (plus) acc += term; else acc -= term;
      plus = !plus;
    }
    dp[mask] = std::move(acc);
  }
  return dp[full - 1];
}

namespace {

LinMap submatrix_without(const LinMap& m, int drop_row, int drop_col) {
  LinMap out(m.ring(), m.dim() - 1);
  for (int i = 0, oi = 0; i < m.dim(); ++i) {
    if (i == drop_row) continue;
    for (int j = 0, oj = 0; j < m.dim(); ++j) {
      if (j == drop_col) continue;
      out.at(oi, oj) = m.at(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

LinMap inverse_gauss_jordan(const LinMap& m) {
  int n = m.dim();
  LinMap a = m;
  LinMap inv = LinMap::identity(m.ring(), n);
  for (int p = 0; p < n; ++p) {
    int pivot = -1;
    for (int i = p; i < n; ++i)
      if (!a.at(i, p).is_zero()) { pivot = i; break; }
    if (pivot < 0) fail(Errc::not_invertible, "singular over " + m.ring().str());
    if (pivot != p)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(p, j), a.at(pivot, j));
        std::swap(inv.at(p, j), inv.at(pivot, j));
      }
    RingElem s = a.at(p, p).inv();
    for (int j = 0; j < n; ++j) {
      a.at(p, j) = s * a.at(p, j);
      inv.at(p, j) = s * inv.at(p, j);
    }
    for (int i = 0; i < n; ++i) {
      if (i == p || a.at(i, p).is_zero()) continue;
      RingElem f = a.at(i, p);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(p, j);
        inv.at(i, j) -= f * inv.at(p, j);
      }
    }
  }
  return inv;
}

}  // namespace

LinMap LinMap::inverse() const {
  if (ring_.is_field()) return inverse_gauss_jordan(*this);
  RingElem d = det();
  if (!d.is_unit())
    fail(Errc::not_invertible, "det = " + d.str() + " is not a unit in " + ring_.str());
  if (n_ == 1) {
    LinMap out(ring_, 1);
    out.at(0, 0) = d.inv();
    return out;
  }
  // adj(M)^T_{ij} = (-1)^{i+j} det(M without row i, col j); M^-1 = det^-1 adj
  RingElem dinv = d.inv();
  LinMap out(ring_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      RingElem c = submatrix_without(*this, i, j).det();
      if ((i + j) % 2 != 0) c = -c;
      out.at(j, i) = dinv * c;
    }
  return out;
}

LinMap LinMap::transpose() const {
  LinMap out(ring_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(i, j) = at(j, i);
  return out;
}

std::string LinMap::str() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < n_; ++j) {
      if (j) s += ", ";
      s += at(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

int rank_over_field(LinMap m) {
  if (!m.ring().is_field())
    fail(Errc::unsupported_ring, "rank over " + m.ring().str());
  int n = m.dim();
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int i = rank; i < n; ++i)
      if (!m.at(i, col).is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < n; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
    RingElem s = m.at(rank, col).inv();
    for (int j = 0; j < n; ++j) m.at(rank, j) = s * m.at(rank, j);
    for (int i = 0; i < n; ++i) {
      if (i == rank || m.at(i, col).is_zero()) continue;
      RingElem f = m.at(i, col);
      for (int j = 0; j < n; ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace cayley
