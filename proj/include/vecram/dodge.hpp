#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vecram/rational.hpp"

namespace vecram {

// Canonical enumeration of the rationals: by height max(|num|, den) of the
// reduced fraction, then denominator ascending, then |num| ascending, with
// the positive sign first.  Starts 0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, ...
class RationalSeq {
 public:
  const Rat& at(std::size_t i);

 private:
  void grow();
  std::vector<Rat> vals_;
  long long h_ = 0;
};

// Affine line in canonical form: direction has leading entry 1 at the pivot
// coordinate and zeros before it; the base point is zero at the pivot.
struct QLine {
  int pivot = 0;
  QVec dir, base;

  QVec point(const Rat& t) const;
  bool contains(const QVec& p) const;
  // Parameter of p when it lies on the line (p = base + t*dir).
  std::optional<Rat> param(const QVec& p) const;
};

// Deterministic enumeration of all affine lines of Q^n under a named scheme.
// Scheme "diag_lines_v1": lines grouped by total height weight s = 0, 1, ...;
// within a weight, pivot ascending; within a pivot, the free components
// (direction entries above the pivot, then base entries off the pivot, each
// coordinate ascending) run through compositions of s in lexicographic order,
// every part mapped through RationalSeq.  The seed is recorded for
// replayability but this scheme does not randomize.
class LineEnum {
 public:
  LineEnum(int n, const std::string& scheme, std::uint64_t seed);
  const QLine& at(std::size_t i);
  int ambient() const { return n_; }

 private:
  void grow();
  int n_;
  std::uint64_t seed_;
  RationalSeq seq_;
  std::vector<QLine> lines_;
  long long weight_ = -1;
};

struct DodgeSet {
  int n = 0;
  std::string scheme;
  std::uint64_t seed = 0;
  std::vector<QVec> points;
  std::vector<std::size_t> owner;  // owner[i] = index of the point on line i
};

// Greedy transversal of the first `lines` enumerated lines with no three
// chosen points collinear: reuse the first existing point on the line, else
// take the first parameter (RationalSeq order) avoiding every secant.
DodgeSet dodge_lines(int n, int lines,
                     const std::string& scheme = "diag_lines_v1",
                     std::uint64_t seed = 0);

// Least index triple i < j < k of collinear points, if any.
std::optional<std::array<std::size_t, 3>> first_collinear_triple(
    const std::vector<QVec>& pts, bool parallel = false);

bool no_three_collinear(const std::vector<QVec>& pts, bool parallel = false);

}  // namespace vecram
