#include "vecram/hitting.hpp"

#include <algorithm>
#include <stdexcept>

#include "vecram/kernels.hpp"

namespace vecram {

ApSpec ap_at(std::size_t idx, const std::string& scheme) {
  if (scheme != "diag_aps_v1")
    throw std::invalid_argument("unknown progression scheme: " + scheme);
  std::size_t s = 0;
  std::size_t before = 0;  // progressions on diagonals < s
  while (before + s + 1 <= idx) {
    before += s + 1;
    ++s;
  }
  std::int64_t a = std::int64_t(idx - before);
  return ApSpec{a, std::int64_t(s) - a + 1};
}

bool completes_three_ap(std::int64_t u, std::int64_t v, std::int64_t c) {
  if (u == v) return false;
  return 2 * v == u + c || 2 * u == v + c || 2 * c == u + v;
}

HittingSet ap_hitting_set(int aps, const std::string& scheme,
                          std::uint64_t seed) {
  if (aps < 0)
    throw std::invalid_argument("progression count must be nonnegative");
  HittingSet out;
  out.scheme = scheme;
  out.seed = seed;
  for (int i = 0; i < aps; ++i) {
    ApSpec ap = ap_at(std::size_t(i), scheme);
    std::optional<std::int64_t> reuse;
    for (std::int64_t y : out.elements)
      if (y >= ap.a && (y - ap.a) % ap.x == 0 && (!reuse || y < *reuse))
        reuse = y;
    if (reuse) {
      out.chosen.push_back(*reuse);
      continue;
    }
    for (std::int64_t c = ap.a;; c += ap.x) {
      bool clear = true;
      for (std::size_t a = 0; a < out.elements.size() && clear; ++a)
        for (std::size_t b = a + 1; b < out.elements.size() && clear; ++b)
          clear = !completes_three_ap(out.elements[a], out.elements[b], c);
      if (clear) {
        out.elements.push_back(c);
        out.chosen.push_back(c);
        break;
      }
    }
  }
  return out;
}

std::optional<std::array<std::int64_t, 3>> first_three_ap(
    const std::vector<std::int64_t>& values, bool parallel) {
  std::vector<std::int64_t> v = values;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::size_t m = v.size();
  auto pair_hits = [&](std::uint64_t flat) {
    std::size_t i = std::size_t(flat / m), j = std::size_t(flat % m);
    if (j <= i) return false;
    std::int64_t z = 2 * v[j] - v[i];
    return std::binary_search(v.begin() + j + 1, v.end(), z);
  };
  auto hit = least_satisfying(std::uint64_t(m) * m, pair_hits, parallel);
  if (!hit) return std::nullopt;
  std::size_t i = std::size_t(*hit / m), j = std::size_t(*hit % m);
  return std::array<std::int64_t, 3>{v[i], v[j], 2 * v[j] - v[i]};
}

bool three_ap_free(const std::vector<std::int64_t>& values, bool parallel) {
  return !first_three_ap(values, parallel).has_value();
}

}  // namespace vecram
