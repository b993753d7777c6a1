#include <omp.h>

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "vecram/hitting.hpp"

using namespace vecram;

TEST_CASE("progression enumeration walks the diagonals") {
  CHECK(ap_at(0).a == 0);
  CHECK(ap_at(0).x == 1);
  CHECK(ap_at(1).a == 0);
  CHECK(ap_at(1).x == 2);
  CHECK(ap_at(2).a == 1);
  CHECK(ap_at(2).x == 1);
  CHECK(ap_at(5).a == 2);
  CHECK(ap_at(5).x == 1);
  // Distinct for a long prefix.
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::size_t i = 0; i < 300; ++i) {
    ApSpec s = ap_at(i);
    CHECK(s.x >= 1);
    CHECK(s.a >= 0);
    CHECK(seen.insert({s.a, s.x}).second);
  }
  CHECK_THROWS_AS(ap_at(0, "bogus"), std::invalid_argument);
}

TEST_CASE("tiny hitting sets") {
  HittingSet one = ap_hitting_set(1);
  CHECK(one.elements == std::vector<std::int64_t>{0});
  CHECK(one.chosen == std::vector<std::int64_t>{0});

  HittingSet three = ap_hitting_set(3);
  CHECK(three.elements == std::vector<std::int64_t>{0, 1});
  CHECK(three.chosen == std::vector<std::int64_t>{0, 0, 1});
}

TEST_CASE("hitting sets meet every progression without a 3-AP") {
  HittingSet h = ap_hitting_set(50);
  REQUIRE(h.chosen.size() == 50);
  std::set<std::int64_t> members(h.elements.begin(), h.elements.end());
  CHECK(members.size() == h.elements.size());
  for (std::size_t i = 0; i < 50; ++i) {
    ApSpec s = ap_at(i);
    CHECK(members.count(h.chosen[i]) == 1);
    CHECK(h.chosen[i] >= s.a);
    CHECK((h.chosen[i] - s.a) % s.x == 0);
  }
  CHECK(three_ap_free(h.elements));
}

TEST_CASE("completes_three_ap matches a brute scan") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    std::int64_t u = rng() % 40, v = rng() % 40, c = rng() % 40;
    bool brute = false;
    // c in an AP with u and v in some order.
    std::int64_t tri[3][3] = {{u, v, c}, {u, c, v}, {c, u, v}};
    for (auto& t : tri) {
      std::int64_t x = t[0], y = t[1], z = t[2];
      if (x != y && 2 * y == x + z) brute = true;
    }
    if (u != v && u != c && v != c)
      CHECK(completes_three_ap(u, v, c) == brute);
  }
  CHECK(completes_three_ap(0, 1, 2));
  CHECK(completes_three_ap(0, 2, 1));
  CHECK(completes_three_ap(2, 0, 1));
  CHECK(!completes_three_ap(0, 1, 3));
}

TEST_CASE("first_three_ap scans sorted values") {
  auto t = first_three_ap({0, 1, 2});
  REQUIRE(t);
  CHECK(*t == std::array<std::int64_t, 3>{0, 1, 2});
  CHECK(!first_three_ap({0, 1, 3, 4}));
  CHECK(three_ap_free({0, 1, 3, 4}));
  CHECK(!three_ap_free({0, 1, 2}));
  // Order of the input list does not matter.
  auto u = first_three_ap({9, 0, 5, 1});
  REQUIRE(u);
  CHECK(*u == std::array<std::int64_t, 3>{1, 5, 9});
}

TEST_CASE("serial and parallel 3-AP scans agree") {
  omp_set_num_threads(4);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::set<std::int64_t> draw;
    while (draw.size() < 25) draw.insert(std::int64_t(rng() % 2000));
    std::vector<std::int64_t> vals(draw.begin(), draw.end());
    CHECK(first_three_ap(vals, false) == first_three_ap(vals, true));
  }
}
