#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vecram/colouring.hpp"
#include "vecram/enumerate.hpp"
#include "vecram/errors.hpp"
#include "vecram/subspace.hpp"

namespace vecram {

// Caps for the doubly exponential exhaustive searches.  Exceeding a cap raises
// BudgetError rather than truncating silently.
struct Budget {
  std::uint64_t max_colourings = std::uint64_t(1) << 24;
  std::uint64_t max_nodes = std::uint64_t(1) << 26;
};

struct MonoFlatHit {
  AffineFlat flat;
  std::uint8_t colour;
};

// First d-flat (canonical flat order) of the colouring's domain whose points
// all share one colour.
std::optional<MonoFlatHit> find_mono_flat(const Colouring& c, int d,
                                          bool parallel = false);

// First d-flat inside the given region (a subflat of the domain) whose points
// all have the stated colour.  The region flat's direction space provides the
// coefficient coordinates for the canonical order.
std::optional<AffineFlat> find_colour_flat(const Colouring& c,
                                           const AffineFlat& region, int d,
                                           std::uint8_t colour,
                                           bool parallel = false);

// Colour assignment on the lines of F_q^n, stored by line index in the
// canonical line order of the full space.
class LineColouring {
 public:
  LineColouring(const Field& f, int n, int colours,
                std::vector<std::uint8_t> values);
  static LineColouring from_index(const Field& f, int n, int colours,
                                  std::uint64_t index);

  const Field& field() const { return field_; }
  int ambient() const { return n_; }
  int colours() const { return colours_; }
  std::uint64_t line_total() const { return values_.size(); }
  std::uint8_t at_index(std::uint64_t i) const { return values_.at(i); }
  // Colour of the line through a nonzero vector.
  std::uint8_t at_line_of(const FqVec& member) const;

 private:
  Field field_;
  int n_;
  int colours_;
  std::vector<std::uint8_t> values_;
  std::vector<std::uint32_t> line_of_rank_;
};

struct LineMonoHit {
  Subspace space;
  std::uint8_t colour;
};

// First d-subspace (canonical subspace order) all of whose lines share one
// colour.
std::optional<LineMonoHit> find_line_mono_subspace(const LineColouring& c,
                                                   int d,
                                                   bool parallel = false);

// Evidence from one ambient dimension of the empirical search: how many
// colourings were scanned and the least counterexample, if any.
struct GlrEvidence {
  int n = 0;
  std::uint64_t colourings = 0;
  std::optional<std::uint64_t> least_failing;
};

struct GlrResult {
  std::optional<int> value;  // least sufficient n, empty if none <= cap
  std::vector<GlrEvidence> evidence;
};

// Least n <= n_cap such that every `colours`-colouring of the points (t = 0,
// target a monochromatic d-flat) or of the lines (t = 1, target a d-subspace
// with all lines one colour) of F_q^n contains its target, decided by full
// exhaustion per n.  An empty value means every n up to the cap was refuted.
GlrResult glr_number_empirical(const Field& f, int colours, int d, int t,
                               int n_cap, const Budget& budget = {},
                               bool parallel = false);

struct SumSystem {
  std::vector<FqVec> vectors;  // f_1 << ... << f_m, all nonzero
  std::uint8_t colour;         // shared colour of all 2^m - 1 nonempty sums
};

// First (lexicographic by rank tuple) system of m vectors over F_2 whose
// nonempty subset sums are monochromatic.
std::optional<SumSystem> hindman_sums_search(const Colouring& c, int m,
                                             const Budget& budget = {});

// Outcome of scanning every colouring at one size: either all of them contain
// the target, or the least colouring index without one refutes.
struct ExhaustiveVerdict {
  bool holds = false;
  std::uint64_t total = 0;
  std::optional<std::uint64_t> least_failing;
};

ExhaustiveVerdict hindman_exhaustive(const Field& f, int n, int m, int colours,
                                     const Budget& budget = {},
                                     bool parallel = false);

struct VdwWitness {
  std::int64_t a = 0, x = 0;  // progression a, a+x, ..., a+(len-1)x
  std::uint8_t colour = 0;
};

// Least (a, x) whose length-len progression stays inside [0, N) and is
// monochromatic under the interval colouring.
std::optional<VdwWitness> vdw_search(const std::vector<std::uint8_t>& values,
                                     int len);

ExhaustiveVerdict vdw_exhaustive(int N, int len, int colours,
                                 const Budget& budget = {},
                                 bool parallel = false);

// Interval colouring file: header "N 1 k", then N base-36 digits.
struct IntervalColouring {
  std::int64_t N = 0;
  int colours = 0;
  std::vector<std::uint8_t> values;
};

IntervalColouring read_interval_colouring(const std::string& path);

}  // namespace vecram
