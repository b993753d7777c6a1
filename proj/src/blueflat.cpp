#include "vecram/blueflat.hpp"

#include <stdexcept>

#include "vecram/enumerate.hpp"
#include "vecram/errors.hpp"

namespace vecram {

namespace {

void require_two_colours(const Colouring& c) {
  if (c.colours() != 2)
    throw std::invalid_argument("the pipeline works on 2-colourings");
}

bool support_below(const FqVec& v, const Subspace& w) {
  auto st = support_stats(v);
  if (!st.maxsup) return true;
  std::vector<int> ws = w.support();
  if (ws.empty()) return true;  // min of the empty support is plus infinity
  return *st.maxsup < ws.front();
}

// Ambient subspace spanned by coefficient-space rows taken inside V.
Subspace lift_subspace(const Subspace& v_space, const Subspace& coeff) {
  const Field& f = v_space.field();
  std::vector<FqVec> gens;
  gens.reserve(coeff.dim());
  for (const FqVec& r : coeff.rows()) {
    FqVec g(f, v_space.ambient());
    for (int j = 0; j < r.dim(); ++j)
      if (r[j] != 0) g = g + v_space.rows()[j].scaled(r[j]);
    gens.push_back(g);
  }
  return Subspace::span(f, v_space.ambient(), gens);
}

bool flat_all_colour(const Colouring& c, const AffineFlat& flat,
                     std::uint8_t colour) {
  std::uint64_t total = flat.size();
  for (std::uint64_t t = 0; t < total; ++t)
    if (c.at_point(flat.point_at(t)) != colour) return false;
  return true;
}

// True when every line of w has the same colour profile through base.
bool shared_line_profile(const Colouring& c, const FqVec& base,
                         const Subspace& w) {
  std::vector<FqVec> gens = lines_of(w);
  if (gens.empty()) return true;
  std::vector<std::uint8_t> first = line_profile(c, base, gens[0]);
  for (std::size_t i = 1; i < gens.size(); ++i)
    if (line_profile(c, base, gens[i]) != first) return false;
  return true;
}

// Largest-dimension direction U inside `room` with base+U entirely blue,
// scanning dimensions downward and subspaces in canonical order, guided by
// shared line profiles.  Assumes the caller has verified that the colouring
// has no all-red k-flat and that base is blue and lies below `room`.
std::optional<Subspace> best_blue_direction(const Colouring& c,
                                             const FqVec& base,
                                             const Subspace& room, int k) {
  const Field& f = c.field();
  for (int d = room.dim(); d >= 1; --d) {
    SubspaceIndexer subs(f, room.dim(), d);
    for (std::uint64_t i = 0; i < subs.count(); ++i) {
      Subspace w = lift_subspace(room, subs.at(i));
      if (!shared_line_profile(c, base, w)) continue;
      if (flat_all_colour(c, AffineFlat(base, w), kBlue)) return w;
      if (d >= k + 1)
        throw std::logic_error(
            "shared-profile direction of guaranteed size is not all blue");
    }
  }
  return std::nullopt;
}

// Red k-flat anywhere in the colouring's domain, when the dimension fits.
std::optional<AffineFlat> global_red_flat(const Colouring& c, int k) {
  if (k > c.domain().dim()) return std::nullopt;
  return find_colour_flat(c, c.domain(), k, kRed);
}

AffineFlat extend_impl(const Colouring& c, const AffineFlat& blue, int d,
                       int k) {
  const Field& f = c.field();
  int n = blue.ambient();
  int s = blue.max_support();
  if (s >= n - 1) throw AmbientError("no coordinates remain beyond the flat");
  std::vector<FqVec> tail;
  for (int i = s + 1; i < n; ++i) {
    FqVec e(f, n);
    e.set(i, 1);
    tail.push_back(e);
  }
  Subspace room = Subspace::span(f, n, tail);
  std::uint64_t pts = blue.size();
  for (std::uint64_t j = pts; j-- > 0;) {
    auto next = best_blue_direction(c, blue.point_at(j), room, k);
    if (!next)
      throw AmbientError("no blue direction survives through every flat point");
    room = *next;
  }
  if (room.dim() < d)
    throw AmbientError("remaining blue direction below the requested dimension");
  std::vector<FqVec> gens = blue.direction().rows();
  for (const FqVec& r : room.rows()) gens.push_back(r);
  AffineFlat grown(blue.base(), Subspace::span(f, n, gens));
  if (!flat_all_colour(c, grown, kBlue))
    throw std::logic_error("grown flat failed the final blue enumeration");
  return grown;
}

}  // namespace

EndCheckVerdict check_end_determined_blue(const Colouring& c, const FqVec& v,
                                          const Subspace& w, int k) {
  require_two_colours(c);
  if (k < 0) throw std::invalid_argument("target dimension must be nonnegative");
  if (!support_below(v, w))
    return EndCheckVerdict{EndCheckStatus::SupportNotBelow, {}, {}};
  if (c.at_point(v) != kBlue)
    return EndCheckVerdict{EndCheckStatus::BaseNotBlue, {}, {}};
  if (w.dim() < k + 1)
    return EndCheckVerdict{EndCheckStatus::DimTooSmall, {}, {}};
  AffineFlat region(v, w);
  if (auto clash = end_class_clash(c, region))
    return EndCheckVerdict{EndCheckStatus::NotEndDetermined, clash, {}};
  if (auto red = find_colour_flat(c, region, k, kRed))
    return EndCheckVerdict{EndCheckStatus::RedFlatExists, {}, red};
  if (!flat_all_colour(c, region, kBlue))
    throw std::logic_error(
        "end-determined region with no red flat has a non-blue point");
  return EndCheckVerdict{EndCheckStatus::AllBlue, {}, {}};
}

AffineFlat find_blue_flat(const Colouring& c, const FqVec& v,
                          const Subspace& v_space, int k, int d) {
  require_two_colours(c);
  if (k < 0 || d < 0)
    throw std::invalid_argument("dimensions must be nonnegative");
  if (d > v_space.dim())
    throw std::invalid_argument("flat dimension exceeds the ambient space");
  if (!support_below(v, v_space))
    throw std::invalid_argument("base support must lie below the space");
  if (c.at_point(v) != kBlue)
    throw std::invalid_argument("base point must be blue");
  if (k <= v_space.dim() &&
      find_colour_flat(c, AffineFlat(v, v_space), k, kRed))
    throw std::invalid_argument("the region already contains an all-red flat");
  if (d + 1 > v_space.dim())
    throw AmbientError("ambient too small for the shared-profile scan");
  const Field& f = c.field();
  SubspaceIndexer subs(f, v_space.dim(), d + 1);
  for (std::uint64_t i = 0; i < subs.count(); ++i) {
    Subspace w = lift_subspace(v_space, subs.at(i));
    if (!shared_line_profile(c, v, w)) continue;
    if (!flat_all_colour(c, AffineFlat(v, w), kBlue)) {
      if (d >= k)
        throw std::logic_error(
            "shared-profile subspace of guaranteed size is not all blue");
      continue;
    }
    std::vector<FqVec> first(w.rows().begin(), w.rows().begin() + d);
    return AffineFlat(v, Subspace::span(f, v_space.ambient(), first));
  }
  throw AmbientError("no subspace with a shared line profile at this size");
}

AffineFlat extend_blue_flat(const Colouring& c, const AffineFlat& blue, int d,
                            int k) {
  require_two_colours(c);
  if (d < 1) throw std::invalid_argument("extension dimension must be positive");
  if (k < 0) throw std::invalid_argument("target dimension must be nonnegative");
  if (!flat_all_colour(c, blue, kBlue))
    throw std::invalid_argument("the starting flat is not all blue");
  if (global_red_flat(c, k))
    throw std::invalid_argument("the colouring contains an all-red flat");
  return extend_impl(c, blue, d, k);
}

GrowthResult grow_blue_flat(const Colouring& c, int k) {
  require_two_colours(c);
  if (k < 0) throw std::invalid_argument("target dimension must be nonnegative");
  GrowthResult out;
  if (auto red = global_red_flat(c, k)) {
    out.red_flat = red;
    return out;
  }
  std::optional<std::uint64_t> blue_at;
  for (std::uint64_t t = 0; t < c.size(); ++t)
    if (c.at_index(t) == kBlue) {
      blue_at = t;
      break;
    }
  if (!blue_at)
    throw AmbientError(
        "no blue point and the red target dimension exceeds the space");
  AffineFlat flat = AffineFlat::single_point(c.domain().point_at(*blue_at));
  out.trace.push_back(flat);
  while (true) {
    try {
      flat = extend_impl(c, flat, 1, k);
    } catch (const AmbientError&) {
      break;
    }
    out.trace.push_back(flat);
  }
  out.blue_flat = flat;
  return out;
}

GlrPlan build_glr_plan(const Field& f, int target, int steps,
                       const Budget& budget) {
  if (target < 0)
    throw std::invalid_argument("target dimension must be nonnegative");
  if (f.q() > 30)
    throw std::invalid_argument("profile count overflows for this field");
  GlrPlan plan;
  plan.target = target;
  plan.profile_colours = 1 << (f.q() - 1);
  int prev = target;
  bool dead = false;
  for (int i = 0; i < steps; ++i) {
    if (dead) {
      plan.dims.push_back(std::nullopt);
      continue;
    }
    std::optional<int> value;
    try {
      GlrResult r = glr_number_empirical(f, plan.profile_colours, prev + 1, 1,
                                         prev + 4, budget, false);
      value = r.value;
    } catch (const BudgetError&) {
      value = std::nullopt;
    }
    plan.dims.push_back(value);
    if (!value) {
      dead = true;
    } else {
      prev = *value;
    }
  }
  return plan;
}

}  // namespace vecram
