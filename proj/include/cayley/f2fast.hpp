#pragma once

#include <cstdint>
#include <vector>

#include "cayley/algebras.hpp"
#include "cayley/linmap.hpp"

namespace cayley {

// Bit-packed acceleration for exhaustive scans over F2.  An element of a
// rank-n algebra over F2 is a mask whose bit k is coordinate k; a linear map
// is a uint64 whose byte j is the image mask of basis vector j.  The tables
// are built once through the generic algebra operations, so every lookup
// agrees with the exact-arithmetic path by construction.
struct F2Table {
  AlgebraRef alg;
  int rank;                  // 4 or 8
  unsigned count;            // 2^rank
  unsigned one;              // mask of the algebra's 1
  std::vector<uint8_t> mul;  // count*count products, index (x << rank) | y
  std::vector<uint8_t> nrm;  // norm bit per mask
  std::vector<uint8_t> trc;  // trace bit per mask

  uint8_t mul_at(unsigned x, unsigned y) const { return mul[(x << rank) | y]; }
};

F2Table f2_table(const AlgebraRef& alg);  // requires ring F2, UnsupportedRing otherwise

unsigned f2_mask(const AlgElem& x);
AlgElem f2_elem(const AlgebraRef& alg, unsigned mask);

uint64_t f2_pack(const LinMap& T);  // requires ring F2, dim <= 8
LinMap f2_unpack(const RingSpec& f2, int n, uint64_t key);
unsigned f2_apply(int n, uint64_t key, unsigned mask);
uint64_t f2_compose(int n, uint64_t a, uint64_t b);  // a after b
// Inverse by Gaussian elimination; returns 0 when singular (0 is never an
// invertible map's key since an invertible map has no zero column).
uint64_t f2_inverse(int n, uint64_t a);

// Full group check on packed maps: identity present, every inverse present,
// and all |S|^2 compositions land in S.  `keys` must be sorted.
bool f2_group_closed(int n, const std::vector<uint64_t>& keys);

}  // namespace cayley
