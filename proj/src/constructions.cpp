#include "vecram/constructions.hpp"

#include <stdexcept>

#include "vecram/errors.hpp"

namespace vecram {
namespace {

// Kernel basis of an r x c matrix over GF(q): vectors v with M v = 0.
std::vector<std::vector<std::uint8_t>> kernel_basis(
    const Field& f, std::vector<std::vector<std::uint8_t>> m, int cols) {
  std::vector<int> pivot_of_row;
  int rank = 0;
  for (int col = 0; col < cols && rank < int(m.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < int(m.size()); ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    std::uint8_t inv = f.inv(m[rank][col]);
    for (int j = 0; j < cols; ++j) m[rank][j] = f.mul(m[rank][j], inv);
    for (int r = 0; r < int(m.size()); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      std::uint8_t c = m[r][col];
      for (int j = 0; j < cols; ++j)
        m[r][j] = f.sub(m[r][j], f.mul(c, m[rank][j]));
    }
    pivot_of_row.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivot_of_row) is_pivot[p] = true;
  std::vector<std::vector<std::uint8_t>> basis;
  for (int j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<std::uint8_t> v(cols, 0);
    v[j] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_of_row[r]] = f.neg(m[r][j]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

ShiftResult shift_support(const Subspace& w, int x) {
  if (x < 0 || x >= w.ambient()) throw std::invalid_argument("coordinate out of range");
  const Field& f = w.field();
  int d = w.dim();
  // Restriction of the basis to coordinates 0..x, one matrix row per
  // coordinate; kernel vectors are the coefficient tuples of members
  // vanishing there.
  std::vector<std::vector<std::uint8_t>> m(x + 1, std::vector<std::uint8_t>(d, 0));
  for (int j = 0; j <= x; ++j)
    for (int i = 0; i < d; ++i) m[j][i] = w.rows()[i][j];
  std::vector<FqVec> gens;
  for (const auto& c : kernel_basis(f, std::move(m), d)) {
    FqVec g(f, w.ambient());
    for (int i = 0; i < d; ++i)
      if (c[i] != 0) g = g + w.rows()[i].scaled(c[i]);
    gens.push_back(g);
  }
  return {Subspace::span(f, w.ambient(), gens), d - (x + 1) >= 1};
}

Subspace kill_coordinate(const Subspace& w, int x, int k) {
  if (x < 0 || x >= w.ambient()) throw std::invalid_argument("coordinate out of range");
  if (k < 0) throw std::invalid_argument("negative dimension");
  if (w.dim() < k + 1)
    throw std::invalid_argument("kill_coordinate needs dim W >= k+1");
  const Field& f = w.field();

  std::vector<FqVec> vanishing, rest;
  for (int i = 0; i <= k; ++i) {
    const FqVec& fi = w.rows()[i];
    if (fi[x] == 0)
      vanishing.push_back(fi);
    else
      rest.push_back(fi.scaled(f.inv(fi[x])));  // value 1 at x
  }

  std::vector<FqVec> basis;
  if (int(vanishing.size()) >= k) {
    basis.assign(vanishing.begin(), vanishing.begin() + k);
  } else {
    basis = vanishing;
    for (std::size_t j = 1; j < rest.size(); ++j) basis.push_back(rest[j] - rest[0]);
  }
  Subspace u = Subspace::span(f, w.ambient(), basis);
  if (u.dim() != k) throw std::logic_error("kill_coordinate produced wrong dimension");
  return u;
}

AffineFlat fix_coordinate_affine(const Subspace& w, int x, std::uint8_t a, int k) {
  if (x < 0 || x >= w.ambient()) throw std::invalid_argument("coordinate out of range");
  const Field& f = w.field();
  const FqVec* pivot_row = nullptr;
  for (const FqVec& row : w.rows())
    if (row[x] != 0) {
      pivot_row = &row;
      break;
    }
  if (pivot_row == nullptr && a != 0)
    throw std::invalid_argument("coordinate off the support cannot take a nonzero value");
  Subspace u = kill_coordinate(w, x, k);
  FqVec base(f, w.ambient());
  if (pivot_row != nullptr && a != 0)
    base = pivot_row->scaled(f.mul(a, f.inv((*pivot_row)[x])));
  return AffineFlat(std::move(base), std::move(u));
}

std::vector<FqVec> extract_block_chain(const AffineFlat& flat, int m) {
  if (m < 0) throw std::invalid_argument("negative chain length");
  SupportStats base_stats = support_stats(flat.base());
  int x = base_stats.maxsup ? *base_stats.maxsup : -1;
  Subspace u = flat.direction();
  std::vector<FqVec> chain;
  chain.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (x >= 0) {
      if (x >= u.ambient() - 1)
        throw AmbientError("no coordinates remain beyond the current block");
      u = shift_support(u, x).space;
    }
    if (u.dim() == 0)
      throw AmbientError("direction space exhausted before the chain was complete");
    FqVec fi = u.rows()[0];
    chain.push_back(fi);
    x = *support_stats(fi).maxsup;
  }
  return chain;
}

}  // namespace vecram
