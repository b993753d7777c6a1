#pragma once

#include <vector>

#include "vecram/rational.hpp"

namespace vecram {

// Subspace of Q^n in reduced row echelon form, mirroring the finite-field
// representation: rows nonzero, pivots strictly increasing with entry 1 and
// zero elsewhere in their column.
struct QSubspace {
  int ambient = 0;
  std::vector<QVec> rows;
  std::vector<int> pivots;

  int dim() const { return int(rows.size()); }
};

QSubspace qspan(int n, const std::vector<QVec>& generators);

// Remainder of v after elimination against the basis; zero iff v is a member.
QVec qreduce(const QSubspace& s, QVec v);
bool qcontains(const QSubspace& s, const QVec& v);

int qrank(int n, const std::vector<QVec>& vectors);

// Members of w vanishing on every coordinate up to and including x.
QSubspace qshift_support(const QSubspace& w, int x);

}  // namespace vecram
