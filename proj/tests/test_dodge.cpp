#include <omp.h>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "vecram/dodge.hpp"

using namespace vecram;

TEST_CASE("rational sequence prefix") {
  RationalSeq seq;
  const char* expect[] = {"0",  "1",    "-1",   "2",   "-2",
                          "1/2", "-1/2", "3",    "-3",  "3/2",
                          "-3/2", "1/3", "-1/3", "2/3", "-2/3"};
  for (std::size_t i = 0; i < 15; ++i) CHECK(rat_str(seq.at(i)) == expect[i]);
  // Later entries stay distinct.
  std::set<std::string> seen;
  for (std::size_t i = 0; i < 200; ++i) CHECK(seen.insert(rat_str(seq.at(i))).second);
}

TEST_CASE("line parameterization") {
  QLine l;
  l.pivot = 0;
  l.dir = {Rat(1), Rat(2)};
  l.base = {Rat(0), Rat(3)};
  CHECK(l.point(Rat(2)) == QVec{Rat(2), Rat(7)});
  CHECK(l.contains(QVec{Rat(1), Rat(5)}));
  CHECK(!l.contains(QVec{Rat(1), Rat(4)}));
  auto t = l.param(QVec{Rat(-1, 2), Rat(2)});
  REQUIRE(t);
  CHECK(*t == Rat(-1, 2));
  CHECK(!l.param(QVec{Rat(0), Rat(0)}));
}

TEST_CASE("line enumeration is canonical and distinct") {
  LineEnum e(2, "diag_lines_v1", 0);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < 50; ++i) {
    const QLine& l = e.at(i);
    CHECK(l.dir[l.pivot] == 1);
    for (int j = 0; j < l.pivot; ++j) CHECK(l.dir[j] == 0);
    CHECK(l.base[l.pivot] == 0);
    std::string key;
    for (const Rat& x : l.dir) key += rat_str(x) + ",";
    key += "|";
    for (const Rat& x : l.base) key += rat_str(x) + ",";
    CHECK(seen.insert(key).second);
  }
  // The first line is the first axis through the origin.
  const QLine& l0 = e.at(0);
  CHECK(l0.pivot == 0);
  CHECK(qvec_is_zero(l0.base));
  CHECK(l0.dir == QVec{Rat(1), Rat(0)});
}

TEST_CASE("unknown schemes are rejected") {
  CHECK_THROWS_AS(LineEnum(2, "no_such_scheme", 0), std::invalid_argument);
  CHECK_THROWS_AS(dodge_lines(2, 5, "no_such_scheme"), std::invalid_argument);
  CHECK_THROWS_AS(dodge_lines(0, 5), std::invalid_argument);
}

TEST_CASE("single-line transversal") {
  DodgeSet d = dodge_lines(2, 1);
  CHECK(d.points.size() == 1);
  CHECK(d.owner == std::vector<std::size_t>{0});
  LineEnum e(2, d.scheme, d.seed);
  CHECK(e.at(0).contains(d.points[0]));
}

TEST_CASE("transversal hits every line with no three collinear") {
  for (int lines : {5, 20}) {
    DodgeSet d = dodge_lines(2, lines);
    CHECK(int(d.owner.size()) == lines);
    LineEnum e(2, d.scheme, d.seed);
    for (std::size_t i = 0; i < d.owner.size(); ++i) {
      CHECK(d.owner[i] < d.points.size());
      CHECK(e.at(i).contains(d.points[d.owner[i]]));
    }
    CHECK(no_three_collinear(d.points));
  }
}

TEST_CASE("transversal reuses points across concurrent lines") {
  // Many early lines pass through the origin, so the greedy rule keeps the
  // point count well below the line count.
  DodgeSet d = dodge_lines(2, 30);
  CHECK(d.points.size() < 30);
}

TEST_CASE("first_collinear_triple finds the least triple") {
  QVec a{Rat(0), Rat(0)}, b{Rat(1), Rat(1)}, c{Rat(2), Rat(2)};
  QVec off{Rat(1), Rat(0)};
  auto t = first_collinear_triple({a, off, b, c});
  REQUIRE(t);
  CHECK(*t == std::array<std::size_t, 3>{0, 2, 3});
  CHECK(!first_collinear_triple({a, off, b}));
  CHECK(!first_collinear_triple({a, off}));

  // Duplicated points count as collinear with anything.
  auto dup = first_collinear_triple({a, off, a});
  REQUIRE(dup);
  CHECK(*dup == std::array<std::size_t, 3>{0, 1, 2});
}

TEST_CASE("serial and parallel collinearity scans agree") {
  omp_set_num_threads(4);
  DodgeSet d = dodge_lines(2, 40);
  std::vector<QVec> clean = d.points;
  CHECK(first_collinear_triple(clean, false) ==
        first_collinear_triple(clean, true));
  std::vector<QVec> spiked = clean;
  spiked.push_back(qvec_scaled(qvec_add(clean[2], clean[5]), Rat(1, 2)));
  spiked.push_back(clean[2]);
  auto s = first_collinear_triple(spiked, false);
  auto p = first_collinear_triple(spiked, true);
  REQUIRE(s);
  CHECK(*s == *p);
  CHECK(no_three_collinear(clean, true));
  CHECK(!no_three_collinear(spiked, true));
}
