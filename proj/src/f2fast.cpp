#include "cayley/f2fast.hpp"

#include <algorithm>

namespace cayley {

namespace {

bool is_f2(const RingSpec& r) {
  return r.kind() == RingKind::prime_field && r.modulus() == 2;
}

}  // namespace

unsigned f2_mask(const AlgElem& x) {
  unsigned m = 0;
  for (size_t k = 0; k < x.coords().size(); ++k)
    if (!x.coords()[k].is_zero()) m |= 1u << k;
  return m;
}

AlgElem f2_elem(const AlgebraRef& alg, unsigned mask) {
  std::vector<RingElem> c;
  c.reserve(alg->rank());
  for (int k = 0; k < alg->rank(); ++k)
    c.emplace_back(alg->ring(), (mask >> k) & 1u);
  return {alg, std::move(c)};
}

F2Table f2_table(const AlgebraRef& alg) {
  if (!is_f2(alg->ring()))
    fail(Errc::unsupported_ring, "f2_table over " + alg->ring().str());
  F2Table t;
  t.alg = alg;
  t.rank = alg->rank();
  t.count = 1u << t.rank;
  t.one = f2_mask(alg_one(alg));
  std::vector<AlgElem> elems;
  elems.reserve(t.count);
  for (unsigned m = 0; m < t.count; ++m) elems.push_back(f2_elem(alg, m));
  t.mul.resize(static_cast<size_t>(t.count) * t.count);
  t.nrm.resize(t.count);
  t.trc.resize(t.count);
  for (unsigned x = 0; x < t.count; ++x) {
    t.nrm[x] = static_cast<uint8_t>(norm(elems[x]).num() != 0);
    t.trc[x] = static_cast<uint8_t>(trace(elems[x]).num() != 0);
    for (unsigned y = 0; y < t.count; ++y)
      t.mul[(static_cast<size_t>(x) << t.rank) | y] =
          static_cast<uint8_t>(f2_mask(elems[x] * elems[y]));
  }
  return t;
}

uint64_t f2_pack(const LinMap& T) {
  if (!is_f2(T.ring())) fail(Errc::unsupported_ring, "f2_pack over " + T.ring().str());
  if (T.dim() > 8) fail(Errc::rank_mismatch, "f2_pack dimension " + std::to_string(T.dim()));
  uint64_t key = 0;
  for (int j = 0; j < T.dim(); ++j) {
    uint64_t col = 0;
    for (int i = 0; i < T.dim(); ++i)
      if (!T.at(i, j).is_zero()) col |= uint64_t{1} << i;
    key |= col << (8 * j);
  }
  return key;
}

LinMap f2_unpack(const RingSpec& f2, int n, uint64_t key) {
  LinMap T(f2, n);
  for (int j = 0; j < n; ++j) {
    auto col = static_cast<unsigned>((key >> (8 * j)) & 0xff);
    for (int i = 0; i < n; ++i)
      if (col & (1u << i)) T.at(i, j) = RingElem::one(f2);
  }
  return T;
}

unsigned f2_apply(int n, uint64_t key, unsigned mask) {
  unsigned out = 0;
  for (int j = 0; j < n; ++j)
    if (mask & (1u << j)) out ^= static_cast<unsigned>((key >> (8 * j)) & 0xff);
  return out;
}

uint64_t f2_compose(int n, uint64_t a, uint64_t b) {
  uint64_t out = 0;
  for (int j = 0; j < n; ++j) {
    auto bcol = static_cast<unsigned>((b >> (8 * j)) & 0xff);
    out |= static_cast<uint64_t>(f2_apply(n, a, bcol)) << (8 * j);
  }
  return out;
}

uint64_t f2_inverse(int n, uint64_t a) {
  // rows[i]: low byte = row i of a, high byte = row i of the inverse build
  unsigned rows[8];
  for (int i = 0; i < n; ++i) {
    unsigned row = 0;
    for (int j = 0; j < n; ++j)
      if ((a >> (8 * j + i)) & 1) row |= 1u << j;
    rows[i] = row | (1u << (8 + i));
  }
  for (int p = 0; p < n; ++p) {
    int pivot = -1;
    for (int i = p; i < n; ++i)
      if ((rows[i] >> p) & 1) { pivot = i; break; }
    if (pivot < 0) return 0;
    std::swap(rows[p], rows[pivot]);
    for (int i = 0; i < n; ++i)
      if (i != p && ((rows[i] >> p) & 1)) rows[i] ^= rows[p];
  }
  uint64_t inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((rows[i] >> (8 + j)) & 1) inv |= uint64_t{1} << (8 * j + i);
  return inv;
}

bool f2_group_closed(int n, const std::vector<uint64_t>& keys) {
  uint64_t id = 0;
  for (int j = 0; j < n; ++j) id |= uint64_t{1} << (8 * j + j);
  auto member = [&keys](uint64_t k) {
    return std::binary_search(keys.begin(), keys.end(), k);
  };
  if (!member(id)) return false;
  for (uint64_t k : keys) {
    uint64_t inv = f2_inverse(n, k);
    if (inv == 0 || !member(inv)) return false;
  }
  // nibble lookup per left factor: apply(a, m) = lo[m & 15] ^ hi[m >> 4]
  for (uint64_t a : keys) {
    unsigned lo[16], hi[16];
    for (unsigned v = 0; v < 16; ++v) {
      lo[v] = f2_apply(n, a, v);
      hi[v] = n > 4 ? f2_apply(n, a, v << 4) : 0;
    }
    for (uint64_t b : keys) {
      uint64_t out = 0;
      for (int j = 0; j < n; ++j) {
        auto bcol = static_cast<unsigned>((b >> (8 * j)) & 0xff);
        unsigned img = lo[bcol & 15] ^ hi[bcol >> 4];
        out |= static_cast<uint64_t>(img) << (8 * j);
      }
      if (!member(out)) return false;
    }
  }
  return true;
}

}  // namespace cayley
