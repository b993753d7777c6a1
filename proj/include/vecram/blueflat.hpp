#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vecram/colouring.hpp"
#include "vecram/search.hpp"
#include "vecram/subspace.hpp"

namespace vecram {

// Fixed two-colour encoding used by the whole pipeline.
inline constexpr std::uint8_t kRed = 0;
inline constexpr std::uint8_t kBlue = 1;

enum class EndCheckStatus {
  AllBlue,           // hypotheses hold; every point of v+W verified blue
  SupportNotBelow,   // supp(v) does not lie strictly below supp(W)
  BaseNotBlue,       // the base point is not blue
  DimTooSmall,       // dim W < k+1
  NotEndDetermined,  // two points share a leading coefficient, differ in colour
  RedFlatExists,     // v+W contains an all-red k-flat
};

struct EndCheckVerdict {
  EndCheckStatus status;
  std::optional<EndClassClash> clash;    // NotEndDetermined
  std::optional<AffineFlat> red_flat;    // RedFlatExists
};

// Decides whether the hypotheses (base blue, support below, dim W >= k+1,
// colour determined by leading coefficient, no red k-flat inside v+W) hold,
// and if so asserts by enumeration that every point of v+W is blue.
EndCheckVerdict check_end_determined_blue(const Colouring& c, const FqVec& v,
                                          const Subspace& w, int k);

// A d-dimensional all-blue flat v+U with U inside V, found by scanning
// (d+1)-subspaces of V for a shared line profile through v and taking a
// d-subspace of the hit.  Preconditions (v blue, v below V, no red k-flat in
// v+V) are checked.  Throws AmbientError when V cannot host the scan or no
// shared-profile subspace exists at this size.
AffineFlat find_blue_flat(const Colouring& c, const FqVec& v,
                          const Subspace& v_space, int k, int d);

// Extends a verified all-blue flat by a direction space W lying strictly
// beyond its support, with every point of (v+A)+W blue and dim W >= d.
// Works through the points of v+A in descending enumeration order, shrinking
// a candidate direction space greedily.  Throws AmbientError when no room or
// no direction of the requested dimension remains.
AffineFlat extend_blue_flat(const Colouring& c, const AffineFlat& blue, int d,
                            int k);

struct GrowthResult {
  std::optional<AffineFlat> red_flat;   // the dichotomy's first horn
  std::optional<AffineFlat> blue_flat;  // otherwise: the grown blue flat
  std::vector<AffineFlat> trace;        // successive blue flats, first to last
};

// Dichotomy driver: returns an all-red k-flat when one exists, else grows a
// blue flat from the least blue point by repeated extension until the ambient
// dimension is exhausted.
GrowthResult grow_blue_flat(const Colouring& c, int k);

// Dimension requirements Pi_1, Pi_2, ... for iterated blue-flat extension,
// computed from the empirical line-Ramsey numbers with 2^(q-1) profile
// colours: Pi_1 = value for target d+1, Pi_{i+1} = value for target Pi_i + 1.
// An entry is empty once the underlying search runs out of budget or cap.
struct GlrPlan {
  int target = 0;
  int profile_colours = 0;
  std::vector<std::optional<int>> dims;
};

GlrPlan build_glr_plan(const Field& f, int target, int steps,
                       const Budget& budget = {});

}  // namespace vecram
