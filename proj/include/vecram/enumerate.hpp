#pragma once

#include <cstdint>
#include <vector>

#include "vecram/subspace.hpp"

namespace vecram {

// Random-access enumeration of all d-dimensional subspaces of GF(q)^n.
//
// Order: pivot column sets lexicographically; within a pivot set, the free
// entries of the RREF matrix read row-major (row 0 first, columns ascending)
// as base-q digits, digit 0 least significant.  The order is total and
// stable, and index arithmetic lets scans shard into ranges.
class SubspaceIndexer {
 public:
  SubspaceIndexer(Field f, int n, int d);
  std::uint64_t count() const { return total_; }
  Subspace at(std::uint64_t idx) const;

 private:
  Field f_;
  int n_, d_;
  std::vector<std::vector<int>> pivot_sets_;
  std::vector<std::uint64_t> offset_;  // cumulative block starts, size sets+1
  std::uint64_t total_;
};

// Random-access enumeration of all d-dimensional affine flats of GF(q)^n,
// grouped by direction subspace (subspace order above, then base offsets).
// The base offset digits run over the non-pivot columns ascending, so each
// (subspace, base) pair appears exactly once in canonical form.
class FlatIndexer {
 public:
  FlatIndexer(Field f, int n, int d);
  std::uint64_t count() const { return sub_.count() * bases_; }
  AffineFlat at(std::uint64_t idx) const;

 private:
  Field f_;
  int n_, d_;
  SubspaceIndexer sub_;
  std::uint64_t bases_;  // q^(n-d)
};

}  // namespace vecram
