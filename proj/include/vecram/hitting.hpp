#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vecram {

// Infinite arithmetic progression {a + t*x : t >= 0} with x >= 1.
struct ApSpec {
  std::int64_t a = 0;
  std::int64_t x = 1;
};

// Scheme "diag_aps_v1": progressions enumerated along diagonals of constant
// s = a + (x - 1), s = 0, 1, ..., with a ascending inside a diagonal.
ApSpec ap_at(std::size_t idx, const std::string& scheme = "diag_aps_v1");

struct HittingSet {
  std::string scheme;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> elements;  // insertion order
  std::vector<std::int64_t> chosen;    // chosen[i] serves progression i
};

// Greedy set meeting the first `aps` progressions with no three elements in
// arithmetic progression: reuse the least existing member of the progression,
// else add its least element that completes no progression with an existing
// pair.  The seed is recorded for replayability; this scheme ignores it.
HittingSet ap_hitting_set(int aps, const std::string& scheme = "diag_aps_v1",
                          std::uint64_t seed = 0);

// Whether {u, v, c} contains a 3-term arithmetic progression with c involved.
bool completes_three_ap(std::int64_t u, std::int64_t v, std::int64_t c);

// Least (by sorted position) three values x < y < z with 2y = x + z.
std::optional<std::array<std::int64_t, 3>> first_three_ap(
    const std::vector<std::int64_t>& values, bool parallel = false);

bool three_ap_free(const std::vector<std::int64_t>& values,
                   bool parallel = false);

}  // namespace vecram
