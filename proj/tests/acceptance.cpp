// Acceptance checks for the library: one line per criterion, nonzero exit
// when any fails.  Each check pins its own tolerance and time limit.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vecram/blueflat.hpp"
#include "vecram/certificate.hpp"
#include "vecram/constructions.hpp"
#include "vecram/dodge.hpp"
#include "vecram/hitting.hpp"
#include "vecram/midpoint.hpp"
#include "vecram/oscwitness.hpp"
#include "vecram/search.hpp"

using namespace vecram;

namespace {

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<bool(std::string&)> run;
};

bool all_colour(const Colouring& c, const AffineFlat& fl, std::uint8_t col) {
  for (std::uint64_t t = 0; t < fl.size(); ++t)
    if (c.at_point(fl.point_at(t)) != col) return false;
  return true;
}

// 1. Oscillation calculus: additivity across split supports and interval
// sweeps from matched chains.
bool crit_osc_law(std::string& why) {
  std::mt19937 rng(101);
  for (int q : {3, 5}) {
    Field f = Field::make(q);
    for (int trial = 0; trial < 10000; ++trial) {
      FqVec a(f, 10), b(f, 10);
      for (int i = 0; i < 5; ++i) a.set(i, int(rng() % q));
      for (int i = 5; i < 10; ++i) b.set(i, int(rng() % q));
      if (a.is_zero() || b.is_zero()) continue;
      auto sa = support_stats(a), sb = support_stats(b);
      int expect = osc(a) + osc(b) + (sa.hat == sb.check ? 0 : 1);
      if (osc(a + b) != expect) {
        why = "additivity failed on " + to_literal(a) + " + " + to_literal(b);
        return false;
      }
    }
  }
  Field f5 = Field::make(5);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<FqVec> parts;
    int at = 0, widths = 0;
    for (int p = 0; p < 5; ++p) {
      int w = 1 + int(rng() % 2);
      widths += w;
      (void)widths;
      FqVec v(f5, 12);
      v.set(at, 1 + int(rng() % 4));
      for (int i = 1; i < w; ++i) v.set(at + i, int(rng() % 5));
      if (v[at + w - 1] == 0) v.set(at + w - 1, 1);
      parts.push_back(v);
      at += w;
    }
    FlagChain chain = match_ends(make_flag_chain(parts));
    int s = osc(chain_sum(chain));
    OscWitnesses w = osc_interval_witness(chain, {1, 2, 1, 2, 1});
    if (w.s != s || w.vectors.size() != 4) {
      why = "witness chain produced the wrong interval shape";
      return false;
    }
    for (int j = 0; j < 4; ++j)
      if (osc(w.vectors[std::size_t(j)]) != s + j + 1) {
        why = "witness " + std::to_string(j) + " missed oscillation " +
              std::to_string(s + j + 1);
        return false;
      }
  }
  return true;
}

// 2. Empirical point Ramsey numbers for 1-flats over the two smallest fields.
bool crit_glr_values(std::string& why) {
  GlrResult r2 = glr_number_empirical(Field::make(2), 2, 1, 0, 4);
  if (!r2.value || *r2.value != 2) {
    why = "value over GF(2) is not 2";
    return false;
  }
  if (r2.evidence.size() != 2 || !r2.evidence[0].least_failing ||
      *r2.evidence[0].least_failing != 1 || r2.evidence[1].colourings != 16 ||
      r2.evidence[1].least_failing) {
    why = "evidence over GF(2) malformed";
    return false;
  }
  GlrResult r3 = glr_number_empirical(Field::make(3), 2, 1, 0, 3);
  if (!r3.value || *r3.value != 2) {
    why = "value over GF(3) is not 2";
    return false;
  }
  if (r3.evidence.size() != 2 || !r3.evidence[0].least_failing ||
      r3.evidence[1].colourings != 512 || r3.evidence[1].least_failing) {
    why = "evidence over GF(3) malformed";
    return false;
  }
  return true;
}

// 3. The end-determined blue check agrees with brute enumeration on every
// small colouring: qualifying regions are exactly the all-blue verdicts, and
// qualifying regions are entirely blue.
bool crit_end_check(std::string& why) {
  struct Probe {
    int q, n;
    std::uint64_t colourings;
  };
  for (Probe p : {Probe{2, 3, 256}, Probe{3, 2, 512}}) {
    Field f = Field::make(p.q);
    FqVec origin(f, p.n);
    Subspace w = Subspace::full(f, p.n);
    AffineFlat region = AffineFlat::full_space(f, p.n);
    for (std::uint64_t idx = 0; idx < p.colourings; ++idx) {
      Colouring c = Colouring::from_index(f, p.n, 2, idx);
      bool qualifies = c.at_point(origin) == kBlue &&
                       is_end_determined(c, region) &&
                       !find_colour_flat(c, region, 1, kRed).has_value();
      EndCheckVerdict verdict = check_end_determined_blue(c, origin, w, 1);
      bool all_blue_verdict = verdict.status == EndCheckStatus::AllBlue;
      if (qualifies != all_blue_verdict) {
        why = "verdict disagrees with brute enumeration at colouring " +
              std::to_string(idx) + " over GF(" + std::to_string(p.q) + ")";
        return false;
      }
      if (qualifies && !all_colour(c, region, kBlue)) {
        why = "qualifying region is not entirely blue at colouring " +
              std::to_string(idx);
        return false;
      }
    }
  }
  return true;
}

// 4. The red/blue dichotomy covers every small colouring, and its outputs
// survive certificate round trips.
bool crit_dichotomy(std::string& why) {
  Field f = Field::make(2);
  for (std::uint64_t idx = 0; idx < 256; ++idx) {
    Colouring c = Colouring::from_index(f, 3, 2, idx);
    GrowthResult g = grow_blue_flat(c, 1);
    if (g.red_flat.has_value() == g.blue_flat.has_value()) {
      why = "dichotomy returned both or neither at colouring " +
            std::to_string(idx);
      return false;
    }
    if (g.red_flat && !all_colour(c, *g.red_flat, kRed)) {
      why = "red horn is not red at colouring " + std::to_string(idx);
      return false;
    }
    if (g.blue_flat && !all_colour(c, *g.blue_flat, kBlue)) {
      why = "blue horn is not blue at colouring " + std::to_string(idx);
      return false;
    }
  }
  std::mt19937 rng(103);
  for (int trial = 0; trial < 1000; ++trial) {
    Colouring c = Colouring::from_index(f, 5, 2, std::uint64_t(rng()));
    GrowthResult g = grow_blue_flat(c, 1);
    Json cert = g.red_flat
                    ? mono_flat_certificate(2, 5, 1, kRed, *g.red_flat)
                    : blue_flat_certificate(2, 5, 1, *g.blue_flat);
    VerifyOutcome out = verify_certificate(cert, &c, nullptr, nullptr);
    if (!out.ok) {
      why = "certificate failed verification: " + out.detail;
      return false;
    }
  }
  return true;
}

// 5. Interval Ramsey cutoff for 3-term progressions in 2 colours.
bool crit_vdw_cutoff(std::string& why) {
  ExhaustiveVerdict nine = vdw_exhaustive(9, 3, 2);
  ExhaustiveVerdict eight = vdw_exhaustive(8, 3, 2);
  if (!nine.holds) {
    why = "9 points should force a monochromatic progression";
    return false;
  }
  if (eight.holds || !eight.least_failing) {
    why = "8 points should admit a progression-free colouring";
    return false;
  }
  return true;
}

// 6. Line transversal with no three chosen points collinear, checked against
// a cubic brute-force scan.
bool crit_dodge(std::string& why) {
  DodgeSet d = dodge_lines(2, 200);
  LineEnum e(2, d.scheme, d.seed);
  for (std::size_t i = 0; i < 200; ++i) {
    if (d.owner[i] >= d.points.size() ||
        !e.at(i).contains(d.points[d.owner[i]])) {
      why = "line " + std::to_string(i) + " is not met by its point";
      return false;
    }
  }
  const auto& pts = d.points;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (collinear(pts[i], pts[j], pts[k])) {
          why = "chosen points " + std::to_string(i) + ", " +
                std::to_string(j) + ", " + std::to_string(k) +
                " are collinear";
          return false;
        }
  return true;
}

// 7. Progression hitting set, 3-AP-free, against its own brute scan.
bool crit_hitting(std::string& why) {
  HittingSet h = ap_hitting_set(500);
  std::set<std::int64_t> members(h.elements.begin(), h.elements.end());
  if (members.size() != h.elements.size()) {
    why = "hitting set repeats an element";
    return false;
  }
  for (std::size_t i = 0; i < 500; ++i) {
    ApSpec spec = ap_at(i);
    std::int64_t y = h.chosen[i];
    if (y < spec.a || (y - spec.a) % spec.x != 0 || !members.count(y)) {
      why = "progression " + std::to_string(i) + " is not properly met";
      return false;
    }
  }
  std::vector<std::int64_t> sorted(members.begin(), members.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      for (std::size_t k = j + 1; k < sorted.size(); ++k)
        if (sorted[i] + sorted[k] == 2 * sorted[j]) {
          why = "hitting set contains a 3-term progression";
          return false;
        }
  return true;
}

// 8. Radix flattening transfers the midpoint relation exactly, on a large
// random sample, with no exceptions.
bool crit_sigma(std::string& why) {
  std::mt19937 rng(107);
  for (int trial = 0; trial < 1000; ++trial) {
    std::set<std::vector<std::int64_t>> draw;
    std::size_t want = 2 + rng() % 5;
    while (draw.size() < want)
      draw.insert({std::int64_t(rng() % 20), std::int64_t(rng() % 20),
                   std::int64_t(rng() % 20)});
    std::vector<std::vector<std::int64_t>> pts(draw.begin(), draw.end());
    SigmaEmbedding emb;
    try {
      emb = sigma_embed(pts);
    } catch (const std::exception& e) {
      why = std::string("embedding threw: ") + e.what();
      return false;
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j)
        for (std::size_t k = 0; k < pts.size(); ++k) {
          bool coords = true;
          for (std::size_t c = 0; c < 3; ++c)
            coords = coords && midpoint_nat(pts[i][c], pts[j][c], pts[k][c]);
          bool images =
              2 * emb.images[j] == emb.images[i] + emb.images[k];
          if (coords != images) {
            why = "relation transfer failed at trial " + std::to_string(trial);
            return false;
          }
        }
    Json cert = sigma_certificate(emb);
    VerifyOutcome out = verify_certificate(cert, nullptr, nullptr, nullptr);
    if (!out.ok) {
      why = "sigma certificate rejected: " + out.detail;
      return false;
    }
  }
  return true;
}

// 9. The universal quotient embeds every true point structure and exposes a
// verified collapse on an over-related one.
bool crit_universal(std::string& why) {
  std::mt19937 rng(109);
  for (int trial = 0; trial < 1000; ++trial) {
    std::set<std::vector<int>> draw;
    std::size_t want = 2 + rng() % 7;
    while (draw.size() < want)
      draw.insert({int(rng() % 10), int(rng() % 10), int(rng() % 10)});
    std::vector<QVec> pts;
    for (const auto& p : draw)
      pts.push_back(QVec{Rat(p[0]), Rat(p[1]), Rat(p[2])});
    MidpointStructure s = induced_structure(pts);
    UniversalResult r = embed_universal(s);
    if (!r.map || r.collapse) {
      why = "a true point structure collapsed at trial " + std::to_string(trial);
      return false;
    }
    Json cert = embedding_certificate(*r.map, s.size());
    VerifyOutcome out = verify_certificate(cert, nullptr, nullptr, &s);
    if (!out.ok) {
      why = "embedding certificate rejected: " + out.detail;
      return false;
    }
  }
  MidpointStructure clash(3);
  clash.add(0, 1, 2);
  clash.add(0, 2, 1);
  UniversalResult r = embed_universal(clash);
  if (!r.collapse || r.map) {
    why = "the over-related structure did not collapse";
    return false;
  }
  Json cert = collapse_certificate(*r.collapse, clash.size());
  VerifyOutcome out = verify_certificate(cert, nullptr, nullptr, &clash);
  if (!out.ok) {
    why = "collapse certificate rejected: " + out.detail;
    return false;
  }
  EmbeddingMap qm = quotient_images(clash);
  if (qm.images[1] != qm.images[2]) {
    why = "the quotient failed to identify the forced elements";
    return false;
  }
  return true;
}

// 10. Exact non-homogeneity witnesses for the first three lengths.
bool crit_nonhomog(std::string& why) {
  for (int n : {3, 4, 5}) {
    NonHomogWitness w = non_homogeneity_witness(n);
    if (w.fail_index != n - 1) {
      why = "witness for length " + std::to_string(n) +
            " fails at the wrong index";
      return false;
    }
    Json cert = nonhomog_certificate(w);
    VerifyOutcome out = verify_certificate(cert, nullptr, nullptr, nullptr);
    if (!out.ok) {
      why = "witness certificate rejected: " + out.detail;
      return false;
    }
  }
  NonHomogWitness w3 = non_homogeneity_witness(3);
  if (w3.tuple_a != std::vector<std::int64_t>{0, 1, 3} ||
      w3.tuple_b != std::vector<std::int64_t>{0, 1, 4} ||
      w3.image != Rat(3) || w3.expected != Rat(4)) {
    why = "length-3 witness values drifted";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  omp_set_num_threads(4);
  std::vector<Criterion> criteria = {
      {"oscillation-calculus", 10.0, crit_osc_law},
      {"point-ramsey-values", 1.0, crit_glr_values},
      {"end-determined-check", 60.0, crit_end_check},
      {"red-blue-dichotomy", 60.0, crit_dichotomy},
      {"interval-cutoff", 1.0, crit_vdw_cutoff},
      {"line-transversal", 30.0, crit_dodge},
      {"progression-hitting", 30.0, crit_hitting},
      {"radix-flattening", 30.0, crit_sigma},
      {"universal-quotient", 60.0, crit_universal},
      {"non-homogeneity", 1.0, crit_nonhomog},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    std::string why;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = std::string("unexpected exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    if (ok && ms > c.limit_seconds * 1000.0) {
      ok = false;
      why = "exceeded the " + std::to_string(c.limit_seconds) + "s time limit";
    }
    std::printf("[%s] %s (%.0f ms)%s%s\n", ok ? "PASS" : "FAIL", c.name, ms,
                why.empty() ? "" : ": ", why.c_str());
    if (!ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed,
              criteria.size());
  return failed;
}
