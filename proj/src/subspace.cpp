#include "vecram/subspace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vecram {

Subspace Subspace::zero(Field f, int n) { return Subspace(std::move(f), n); }

Subspace Subspace::full(Field f, int n) {
  Subspace s(f, n);
  for (int i = 0; i < n; ++i) {
    FqVec e(f, n);
    e.set(i, 1);
    s.rows_.push_back(e);
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(Field f, int n, const std::vector<FqVec>& generators) {
  Subspace s(f, n);
  for (const FqVec& g : generators) {
    if (g.dim() != n || g.field() != f)
      throw std::invalid_argument("generator shape mismatch");
    FqVec r = s.reduce(g);
    if (r.is_zero()) continue;
    int p = 0;
    while (r[p] == 0) ++p;
    r = r.scaled(f.inv(r[p]));
    // Clear column p in the existing rows, then insert keeping pivots sorted.
    for (FqVec& row : s.rows_)
      if (row[p] != 0) row = row - r.scaled(row[p]);
    auto it = std::upper_bound(s.pivots_.begin(), s.pivots_.end(), p);
    std::size_t at = it - s.pivots_.begin();
    s.pivots_.insert(it, p);
    s.rows_.insert(s.rows_.begin() + at, r);
  }
  return s;
}

FqVec Subspace::reduce(const FqVec& v) const {
  FqVec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint8_t c = r[pivots_[i]];
    if (c != 0) r = r - rows_[i].scaled(c);
  }
  return r;
}

std::optional<std::vector<std::uint8_t>> Subspace::coefficients(const FqVec& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<std::uint8_t> c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

FqVec Subspace::element_at(std::uint64_t t) const {
  FqVec v(field_, ambient_);
  for (const FqVec& row : rows_) {
    std::uint8_t d = std::uint8_t(t % field_.q());
    t /= field_.q();
    if (d != 0) v = v + row.scaled(d);
  }
  if (t != 0) throw std::out_of_range("element index out of range");
  return v;
}

std::vector<int> Subspace::support() const {
  std::set<int> s;
  for (const FqVec& row : rows_)
    for (int i = 0; i < ambient_; ++i)
      if (row[i] != 0) s.insert(i);
  return {s.begin(), s.end()};
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && field_ == o.field_ && pivots_ == o.pivots_ &&
         rows_ == o.rows_;
}

Subspace rref(Field f, int n, const std::vector<FqVec>& vectors) {
  return Subspace::span(std::move(f), n, vectors);
}

AffineFlat::AffineFlat(FqVec base, Subspace direction)
    : base_(direction.field(), direction.ambient()), dir_(std::move(direction)) {
  if (base.dim() != dir_.ambient() || base.field() != dir_.field())
    throw std::invalid_argument("flat base shape mismatch");
  base_ = dir_.reduce(base);
}

AffineFlat AffineFlat::full_space(Field f, int n) {
  FqVec origin(f, n);
  return AffineFlat(std::move(origin), Subspace::full(std::move(f), n));
}

AffineFlat AffineFlat::single_point(FqVec p) {
  Subspace z = Subspace::zero(p.field(), p.dim());
  return AffineFlat(std::move(p), std::move(z));
}

std::optional<std::uint64_t> AffineFlat::index_of(const FqVec& p) const {
  FqVec rel = p - base_;
  auto coeffs = dir_.coefficients(rel);
  if (!coeffs) return std::nullopt;
  std::uint64_t t = 0;
  for (int i = int(coeffs->size()) - 1; i >= 0; --i)
    t = t * field().q() + (*coeffs)[i];
  return t;
}

int AffineFlat::max_support() const {
  int m = -1;
  for (int i = 0; i < ambient(); ++i)
    if (base_[i] != 0) m = i;
  for (const FqVec& row : dir_.rows())
    for (int i = m + 1; i < ambient(); ++i)
      if (row[i] != 0) m = i;
  return m;
}

FqVec line_generator(const FqVec& f) {
  SupportStats s = support_stats(f);
  if (!s.maxsup) throw std::invalid_argument("zero vector spans no line");
  return f.scaled(f.field().inv(s.hat));
}

std::vector<FqVec> lines_of(const Subspace& v) {
  std::vector<FqVec> gens;
  std::uint64_t count = v.element_count();
  for (std::uint64_t t = 1; t < count; ++t) {
    FqVec h = v.element_at(t);
    SupportStats s = support_stats(h);
    if (s.maxsup && s.hat == 1) gens.push_back(h);
  }
  return gens;
}

}  // namespace vecram
