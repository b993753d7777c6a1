#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vecram/fqvec.hpp"

namespace vecram {

// Subspace of GF(q)^n in reduced row echelon form: rows nonzero, pivot
// columns strictly increasing, pivot entries 1, pivot columns zero elsewhere.
// The RREF basis is the canonical representative of the subspace, so equality
// of bases is equality of subspaces.
class Subspace {
 public:
  static Subspace zero(Field f, int n);
  static Subspace full(Field f, int n);
  static Subspace span(Field f, int n, const std::vector<FqVec>& generators);

  const Field& field() const { return field_; }
  int ambient() const { return ambient_; }
  int dim() const { return int(rows_.size()); }
  const std::vector<FqVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Remainder of v after eliminating against the basis.  Zero iff v belongs
  // to the subspace.
  FqVec reduce(const FqVec& v) const;
  bool contains(const FqVec& v) const { return reduce(v).is_zero(); }

  // Coefficients of a member vector in the row basis (just the pivot
  // coordinates, by reducedness); empty for non-members.
  std::optional<std::vector<std::uint8_t>> coefficients(const FqVec& v) const;

  // Element with coefficient tuple given by the base-q digits of t:
  // sum_i digit_i(t) * row_i.  t < q^dim.  This is the canonical element
  // enumeration of the subspace.
  FqVec element_at(std::uint64_t t) const;
  std::uint64_t element_count() const { return point_count(field_.q(), dim()); }

  // Union of the row supports.
  std::vector<int> support() const;

  bool operator==(const Subspace& o) const;

 private:
  Subspace(Field f, int n) : field_(std::move(f)), ambient_(n) {}
  Field field_;
  int ambient_;
  std::vector<FqVec> rows_;
  std::vector<int> pivots_;
};

Subspace rref(Field f, int n, const std::vector<FqVec>& vectors);

// Affine flat base + W in canonical form: the base point is reduced against
// the direction space, i.e. its pivot-column coordinates are zero.
class AffineFlat {
 public:
  AffineFlat(FqVec base, Subspace direction);  // canonicalizes the base
  static AffineFlat full_space(Field f, int n);
  static AffineFlat single_point(FqVec p);

  const FqVec& base() const { return base_; }
  const Subspace& direction() const { return dir_; }
  const Field& field() const { return dir_.field(); }
  int ambient() const { return dir_.ambient(); }
  int dim() const { return dir_.dim(); }

  std::uint64_t size() const { return dir_.element_count(); }
  // Canonical point enumeration: base + element_at(t) of the direction space.
  FqVec point_at(std::uint64_t t) const { return base_ + dir_.element_at(t); }
  // Position of p in the canonical enumeration; empty if p lies outside.
  std::optional<std::uint64_t> index_of(const FqVec& p) const;
  bool contains(const FqVec& p) const { return index_of(p).has_value(); }

  // Largest support coordinate over all points; -1 when every point is zero.
  int max_support() const;

  bool operator==(const AffineFlat& o) const {
    return base_ == o.base_ && dir_ == o.dir_;
  }

 private:
  FqVec base_;
  Subspace dir_;
};

// Scale a nonzero vector so that its value at maxsup becomes 1.  Each
// 1-dimensional subspace contains exactly one such generator.
FqVec line_generator(const FqVec& f);

// Generators of all lines (1-dimensional subspaces) of V, hat-normalized, in
// the order induced by the canonical element enumeration of V.
std::vector<FqVec> lines_of(const Subspace& v);

}  // namespace vecram
