#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "vecram/subspace.hpp"

using namespace vecram;
using tst::vec;

namespace {

// Every element reachable as a combination of the generators, by rank.
std::set<std::uint64_t> brute_span(const Field& f, int n,
                                   const std::vector<FqVec>& gens) {
  std::set<std::uint64_t> out{rank_of(FqVec(f, n))};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint64_t r : std::vector<std::uint64_t>(out.begin(), out.end()))
      for (const FqVec& g : gens)
        for (int a = 1; a < f.q(); ++a) {
          std::uint64_t s = rank_of(vec_of_rank(f, n, r) + g.scaled(a));
          if (out.insert(s).second) grew = true;
        }
  }
  return out;
}

std::set<std::uint64_t> element_ranks(const Subspace& s) {
  std::set<std::uint64_t> out;
  for (std::uint64_t t = 0; t < s.element_count(); ++t)
    out.insert(rank_of(s.element_at(t)));
  return out;
}

}  // namespace

TEST_CASE("rref examples") {
  Field f2 = Field::make(2);
  Subspace a = Subspace::span(f2, 2, {vec(f2, {1, 1}), vec(f2, {0, 1})});
  CHECK(a.dim() == 2);
  CHECK(a.rows() == std::vector<FqVec>{vec(f2, {1, 0}), vec(f2, {0, 1})});

  Field f3 = Field::make(3);
  Subspace b = Subspace::span(f3, 2, {vec(f3, {1, 2}), vec(f3, {2, 1})});
  CHECK(b.dim() == 1);
  CHECK(b.rows() == std::vector<FqVec>{vec(f3, {1, 2})});

  Subspace c = Subspace::span(f2, 3, {});
  CHECK(c.dim() == 0);
  CHECK(c.element_count() == 1);
}

TEST_CASE("rref is idempotent and canonical on exhaustive small spans") {
  for (int q : {2, 3}) {
    Field f = Field::make(q);
    int n = 3;
    std::uint64_t total = point_count(q, n);
    std::map<std::set<std::uint64_t>, Subspace> seen;
    for (std::uint64_t r1 = 0; r1 < total; ++r1)
      for (std::uint64_t r2 = r1; r2 < total; ++r2) {
        std::vector<FqVec> gens{vec_of_rank(f, n, r1), vec_of_rank(f, n, r2)};
        Subspace s = Subspace::span(f, n, gens);
        CHECK(Subspace::span(f, n, s.rows()) == s);
        CHECK(element_ranks(s) == brute_span(f, n, gens));
        auto key = element_ranks(s);
        auto it = seen.find(key);
        if (it == seen.end())
          seen.emplace(key, s);
        else
          CHECK(it->second == s);
      }
  }
}

TEST_CASE("pivot structure is reduced") {
  Field f = Field::make(5);
  Subspace s = Subspace::span(
      f, 4, {vec(f, {2, 1, 0, 3}), vec(f, {0, 0, 1, 1}), vec(f, {4, 2, 0, 1})});
  const auto& piv = s.pivots();
  REQUIRE(int(piv.size()) == s.dim());
  for (int i = 0; i + 1 < int(piv.size()); ++i) CHECK(piv[i] < piv[i + 1]);
  for (int i = 0; i < int(piv.size()); ++i) {
    CHECK(s.rows()[i][piv[i]] == 1);
    for (int j = 0; j < s.dim(); ++j)
      if (j != i) CHECK(s.rows()[j][piv[i]] == 0);
    for (int c = 0; c < piv[i]; ++c) CHECK(s.rows()[i][c] == 0);
  }
}

TEST_CASE("membership, reduction and coefficients") {
  Field f = Field::make(3);
  Subspace s = Subspace::span(f, 3, {vec(f, {1, 0, 2}), vec(f, {0, 1, 1})});
  CHECK(s.contains(vec(f, {1, 1, 0})));
  CHECK(!s.contains(vec(f, {0, 0, 1})));
  CHECK(s.reduce(vec(f, {1, 1, 0})).is_zero());
  for (std::uint64_t t = 0; t < s.element_count(); ++t) {
    FqVec e = s.element_at(t);
    auto coeff = s.coefficients(e);
    REQUIRE(coeff);
    FqVec back(f, 3);
    for (int i = 0; i < s.dim(); ++i)
      back = back + s.rows()[i].scaled((*coeff)[i]);
    CHECK(back == e);
  }
  CHECK(!s.coefficients(vec(f, {0, 0, 1})));
}

TEST_CASE("element enumeration is a bijection") {
  Field f = Field::make(4);
  Subspace s = Subspace::span(f, 3, {vec(f, {1, 0, 1}), vec(f, {0, 1, 3})});
  CHECK(s.element_count() == 16);
  CHECK(element_ranks(s).size() == 16);
  CHECK_THROWS_AS(s.element_at(16), std::out_of_range);
}

TEST_CASE("zero and full subspaces") {
  Field f = Field::make(3);
  CHECK(Subspace::zero(f, 4).dim() == 0);
  Subspace full = Subspace::full(f, 4);
  CHECK(full.dim() == 4);
  CHECK(full.element_count() == 81);
  CHECK(full.support() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("affine flats canonicalize their base point") {
  Field f = Field::make(2);
  Subspace dir = Subspace::span(f, 3, {vec(f, {1, 0, 1})});
  FqVec raw_base = vec(f, {1, 1, 1});
  AffineFlat flat(raw_base, dir);
  CHECK(flat.contains(raw_base));
  // The canonical base has zero pivot coordinates.
  CHECK(flat.base()[dir.pivots()[0]] == 0);
  AffineFlat again(flat.base(), dir);
  CHECK(again == flat);
  // Any member as base gives the same flat.
  AffineFlat shifted(flat.point_at(1), dir);
  CHECK(shifted == flat);
}

TEST_CASE("flat point enumeration and index_of agree") {
  Field f = Field::make(3);
  Subspace dir = Subspace::span(f, 2, {vec(f, {1, 1})});
  AffineFlat flat(vec(f, {0, 2}), dir);
  CHECK(flat.size() == 3);
  for (std::uint64_t t = 0; t < flat.size(); ++t) {
    auto idx = flat.index_of(flat.point_at(t));
    REQUIRE(idx);
    CHECK(*idx == t);
  }
  CHECK(!flat.index_of(vec(f, {0, 0})));
  CHECK(flat.max_support() == 1);
}

TEST_CASE("single points and full spaces as flats") {
  Field f = Field::make(2);
  AffineFlat p = AffineFlat::single_point(vec(f, {1, 0}));
  CHECK(p.dim() == 0);
  CHECK(p.size() == 1);
  CHECK(p.point_at(0) == vec(f, {1, 0}));
  AffineFlat full = AffineFlat::full_space(f, 2);
  CHECK(full.dim() == 2);
  CHECK(full.size() == 4);
}

TEST_CASE("line generators are hat-normalized") {
  Field f = Field::make(3);
  CHECK(line_generator(vec(f, {0, 2, 1})) == vec(f, {0, 2, 1}));
  CHECK(line_generator(vec(f, {0, 2, 2})) == vec(f, {0, 1, 1}));
  CHECK_THROWS_AS(line_generator(FqVec(f, 2)), std::invalid_argument);
}

TEST_CASE("lines_of lists each line exactly once") {
  Field f2 = Field::make(2);
  auto l1 = lines_of(Subspace::full(f2, 3));
  CHECK(l1.size() == 7);
  Field f3 = Field::make(3);
  auto l2 = lines_of(Subspace::full(f3, 2));
  CHECK(l2.size() == 4);
  std::set<std::uint64_t> distinct;
  for (const FqVec& g : l2) {
    CHECK(support_stats(g).hat == 1);
    distinct.insert(rank_of(g));
  }
  CHECK(distinct.size() == 4);
}
