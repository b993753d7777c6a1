#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "vecram/blueflat.hpp"
#include "vecram/errors.hpp"

using namespace vecram;
using tst::unit;
using tst::vec;

namespace {

bool all_points(const Colouring& c, const AffineFlat& fl, std::uint8_t colour) {
  for (std::uint64_t t = 0; t < fl.size(); ++t)
    if (c.at_point(fl.point_at(t)) != colour) return false;
  return true;
}

}  // namespace

TEST_CASE("check_end_determined_blue verdicts") {
  Field f = Field::make(2);
  AffineFlat dom = AffineFlat::full_space(f, 3);
  Subspace w = Subspace::span(f, 3, {unit(f, 3, 1), unit(f, 3, 2)});
  FqVec v = unit(f, 3, 0);

  SUBCASE("all blue") {
    Colouring c(dom, 2, std::vector<std::uint8_t>(8, kBlue));
    EndCheckVerdict verdict = check_end_determined_blue(c, v, w, 1);
    CHECK(verdict.status == EndCheckStatus::AllBlue);
  }

  SUBCASE("base not blue") {
    std::vector<std::uint8_t> vals(8, kBlue);
    vals[*dom.index_of(v)] = kRed;
    Colouring c(dom, 2, vals);
    CHECK(check_end_determined_blue(c, v, w, 1).status ==
          EndCheckStatus::BaseNotBlue);
  }

  SUBCASE("support not below") {
    Colouring c(dom, 2, std::vector<std::uint8_t>(8, kBlue));
    CHECK(check_end_determined_blue(c, unit(f, 3, 1), w, 1).status ==
          EndCheckStatus::SupportNotBelow);
  }

  SUBCASE("dimension too small") {
    Colouring c(dom, 2, std::vector<std::uint8_t>(8, kBlue));
    CHECK(check_end_determined_blue(c, v, w, 2).status ==
          EndCheckStatus::DimTooSmall);
  }

  SUBCASE("not end determined") {
    // Over F_2 every nonzero point has leading coefficient 1, so the whole
    // region is one end class and a single red point clashes with the base.
    std::vector<std::uint8_t> vals(8, kBlue);
    vals[*dom.index_of(vec(f, {1, 1, 1}))] = kRed;
    Colouring c(dom, 2, vals);
    EndCheckVerdict verdict = check_end_determined_blue(c, v, w, 1);
    CHECK(verdict.status == EndCheckStatus::NotEndDetermined);
    REQUIRE(verdict.clash);
    CHECK(c.at_point(verdict.clash->first) != c.at_point(verdict.clash->second));
  }
}

TEST_CASE("check_end_determined_blue finds a red flat") {
  // Colouring by leading coefficient keeps every end class monochromatic.
  // Over F_3 the class with leading coefficient 2 can be all red while the
  // base's class stays blue, and that class holds a full red line.
  Field f = Field::make(3);
  AffineFlat dom = AffineFlat::full_space(f, 3);
  Subspace w = Subspace::span(f, 3, {unit(f, 3, 1), unit(f, 3, 2)});
  FqVec v = unit(f, 3, 0);
  std::vector<std::uint8_t> vals(27);
  for (std::uint64_t t = 0; t < 27; ++t)
    vals[t] = support_stats(dom.point_at(t)).hat == 2 ? kRed : kBlue;
  Colouring c(dom, 2, vals);
  EndCheckVerdict verdict = check_end_determined_blue(c, v, w, 1);
  CHECK(verdict.status == EndCheckStatus::RedFlatExists);
  REQUIRE(verdict.red_flat);
  CHECK(verdict.red_flat->dim() == 1);
  CHECK(all_points(c, *verdict.red_flat, kRed));
}

TEST_CASE("find_blue_flat on an all-blue space") {
  Field f = Field::make(2);
  Colouring c = tst::full_colouring(f, 4, 2, std::vector<std::uint8_t>(16, kBlue));
  FqVec v = unit(f, 4, 0);
  Subspace vs = Subspace::span(f, 4, {unit(f, 4, 1), unit(f, 4, 2), unit(f, 4, 3)});
  AffineFlat blue = find_blue_flat(c, v, vs, 1, 1);
  CHECK(blue.dim() == 1);
  CHECK(blue.contains(v));
  CHECK(all_points(c, blue, kBlue));
}

TEST_CASE("find_blue_flat needs room to scan") {
  Field f = Field::make(2);
  Colouring c = tst::full_colouring(f, 2, 2, std::vector<std::uint8_t>(4, kBlue));
  FqVec v = unit(f, 2, 0);
  Subspace vs = Subspace::span(f, 2, {unit(f, 2, 1)});
  CHECK_THROWS_AS(find_blue_flat(c, v, vs, 1, 1), AmbientError);
}

TEST_CASE("extend_blue_flat grows an all-blue flat") {
  Field f = Field::make(2);
  Colouring c = tst::full_colouring(f, 4, 2, std::vector<std::uint8_t>(16, kBlue));
  AffineFlat seed = AffineFlat::single_point(unit(f, 4, 0));
  AffineFlat grown = extend_blue_flat(c, seed, 1, 1);
  CHECK(grown.dim() >= 1);
  CHECK(grown.contains(unit(f, 4, 0)));
  CHECK(all_points(c, grown, kBlue));
}

TEST_CASE("extend_blue_flat without room throws") {
  Field f = Field::make(2);
  Colouring c = tst::full_colouring(f, 2, 2, std::vector<std::uint8_t>(4, kBlue));
  // The seed flat already spans the last coordinate, nothing lies beyond.
  AffineFlat seed(vec(f, {0, 0}), Subspace::span(f, 2, {vec(f, {0, 1})}));
  CHECK_THROWS_AS(extend_blue_flat(c, seed, 1, 1), AmbientError);
}

TEST_CASE("grow_blue_flat dichotomy on the extremes") {
  Field f = Field::make(2);

  Colouring red = tst::full_colouring(f, 3, 2, std::vector<std::uint8_t>(8, kRed));
  GrowthResult r = grow_blue_flat(red, 1);
  REQUIRE(r.red_flat);
  CHECK(!r.blue_flat);
  CHECK(all_points(red, *r.red_flat, kRed));
  CHECK(*r.red_flat == FlatIndexer(f, 3, 1).at(0));

  Colouring blue = tst::full_colouring(f, 3, 2, std::vector<std::uint8_t>(8, kBlue));
  GrowthResult b = grow_blue_flat(blue, 1);
  REQUIRE(b.blue_flat);
  CHECK(!b.red_flat);
  CHECK(b.blue_flat->dim() == 3);
  CHECK(!b.trace.empty());
  // The trace walks from the seed up to the final flat.
  CHECK(b.trace.back() == *b.blue_flat);
  for (std::size_t i = 1; i < b.trace.size(); ++i)
    CHECK(b.trace[i - 1].dim() < b.trace[i].dim());
}

TEST_CASE("grow_blue_flat decides all F_2^3 colourings") {
  Field f = Field::make(2);
  for (std::uint64_t idx = 0; idx < 256; ++idx) {
    Colouring c = Colouring::from_index(f, 3, 2, idx);
    GrowthResult g = grow_blue_flat(c, 1);
    CHECK(g.red_flat.has_value() != g.blue_flat.has_value());
    if (g.red_flat) {
      CHECK(g.red_flat->dim() == 1);
      CHECK(all_points(c, *g.red_flat, kRed));
    } else {
      CHECK(g.blue_flat->dim() >= 1);
      CHECK(all_points(c, *g.blue_flat, kBlue));
    }
  }
}

TEST_CASE("glr plan dimensions") {
  GlrPlan plan = build_glr_plan(Field::make(2), 1, 2);
  CHECK(plan.target == 1);
  CHECK(plan.profile_colours == 2);
  REQUIRE(plan.dims.size() == 2);
  REQUIRE(plan.dims[0]);
  CHECK(*plan.dims[0] == 3);
  CHECK(!plan.dims[1]);

  // The first step is exactly the empirical line number for target + 1.
  GlrResult direct = glr_number_empirical(Field::make(2), 2, 2, 1, 6);
  REQUIRE(direct.value);
  CHECK(*direct.value == *plan.dims[0]);
}
