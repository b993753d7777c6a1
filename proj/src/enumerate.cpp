#include "vecram/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace vecram {
namespace {

std::vector<std::vector<int>> combinations(int n, int d) {
  std::vector<std::vector<int>> out;
  if (d < 0 || d > n) return out;
  std::vector<int> c(d);
  for (int i = 0; i < d; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = d - 1;
    while (i >= 0 && c[i] == n - d + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < d; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

int free_entry_count(const std::vector<int>& pivots, int n) {
  int cnt = 0;
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (int j = pivots[i] + 1; j < n; ++j)
      if (!std::binary_search(pivots.begin(), pivots.end(), j)) ++cnt;
  return cnt;
}

}  // namespace

SubspaceIndexer::SubspaceIndexer(Field f, int n, int d)
    : f_(std::move(f)), n_(n), d_(d) {
  if (n < 0 || d < 0) throw std::invalid_argument("negative dimension");
  pivot_sets_ = combinations(n, d);
  offset_.push_back(0);
  for (const auto& p : pivot_sets_) {
    std::uint64_t block = point_count(f_.q(), free_entry_count(p, n));
    std::uint64_t next = offset_.back() + block;
    if (next < offset_.back()) throw std::overflow_error("subspace count exceeds 64 bits");
    offset_.push_back(next);
  }
  total_ = offset_.back();
}

Subspace SubspaceIndexer::at(std::uint64_t idx) const {
  if (idx >= total_) throw std::out_of_range("subspace index out of range");
  std::size_t block = std::upper_bound(offset_.begin(), offset_.end(), idx) -
                      offset_.begin() - 1;
  const std::vector<int>& pivots = pivot_sets_[block];
  std::uint64_t t = idx - offset_[block];
  std::vector<FqVec> rows;
  rows.reserve(d_);
  for (int i = 0; i < d_; ++i) {
    FqVec row(f_, n_);
    row.set(pivots[i], 1);
    for (int j = pivots[i] + 1; j < n_; ++j) {
      if (std::binary_search(pivots.begin(), pivots.end(), j)) continue;
      row.set(j, std::uint8_t(t % f_.q()));
      t /= f_.q();
    }
    rows.push_back(row);
  }
  return Subspace::span(f_, n_, rows);
}

FlatIndexer::FlatIndexer(Field f, int n, int d)
    : f_(f), n_(n), d_(d), sub_(f, n, d), bases_(point_count(f.q(), n - d)) {
  if (d > n) bases_ = 0;
}

AffineFlat FlatIndexer::at(std::uint64_t idx) const {
  if (bases_ == 0 || idx >= count()) throw std::out_of_range("flat index out of range");
  Subspace dir = sub_.at(idx / bases_);
  std::uint64_t t = idx % bases_;
  FqVec base(f_, n_);
  const std::vector<int>& pivots = dir.pivots();
  for (int j = 0; j < n_; ++j) {
    if (std::binary_search(pivots.begin(), pivots.end(), j)) continue;
    base.set(j, std::uint8_t(t % f_.q()));
    t /= f_.q();
  }
  return AffineFlat(std::move(base), std::move(dir));
}

}  // namespace vecram
