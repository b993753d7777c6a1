#include "vecram/search.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

#include "vecram/kernels.hpp"

namespace vecram {

namespace {

// base^exp when it stays <= cap, else empty.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                         std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
    if (r > cap) return std::nullopt;
  }
  return r;
}

// Ambient image of a coefficient-space vector: region.base + sum c_j * row_j.
FqVec lift_point(const AffineFlat& region, const FqVec& coeff) {
  FqVec out = region.base();
  const auto& rows = region.direction().rows();
  for (int j = 0; j < coeff.dim(); ++j)
    if (coeff[j] != 0) out = out + rows[j].scaled(coeff[j]);
  return out;
}

AffineFlat lift_flat(const AffineFlat& region, const AffineFlat& coeff_flat) {
  const Field& f = region.field();
  std::vector<FqVec> gens;
  gens.reserve(coeff_flat.dim());
  FqVec zero(f, region.ambient());
  for (const FqVec& r : coeff_flat.direction().rows())
    gens.push_back(lift_point(region, r) - region.base());
  Subspace dir = Subspace::span(f, region.ambient(), gens);
  return AffineFlat(lift_point(region, coeff_flat.base()), dir);
}

}  // namespace

std::optional<AffineFlat> find_colour_flat(const Colouring& c,
                                           const AffineFlat& region, int d,
                                           std::uint8_t colour, bool parallel) {
  if (d < 0 || d > region.dim())
    throw std::invalid_argument("flat dimension exceeds the region dimension");
  const Field& f = c.field();
  FlatIndexer flats(f, region.dim(), d);
  auto hit = least_satisfying(
      flats.count(),
      [&](std::uint64_t idx) {
        AffineFlat cf = flats.at(idx);
        std::uint64_t pts = cf.size();
        for (std::uint64_t t = 0; t < pts; ++t)
          if (c.at_point(lift_point(region, cf.point_at(t))) != colour)
            return false;
        return true;
      },
      parallel);
  if (!hit) return std::nullopt;
  return lift_flat(region, flats.at(*hit));
}

std::optional<MonoFlatHit> find_mono_flat(const Colouring& c, int d,
                                          bool parallel) {
  const AffineFlat& dom = c.domain();
  if (d < 0 || d > dom.dim())
    throw std::invalid_argument("flat dimension exceeds the domain dimension");
  const Field& f = c.field();
  FlatIndexer flats(f, dom.dim(), d);
  auto hit = least_satisfying(
      flats.count(),
      [&](std::uint64_t idx) {
        AffineFlat cf = flats.at(idx);
        std::uint64_t pts = cf.size();
        std::uint8_t first = c.at_point(lift_point(dom, cf.point_at(0)));
        for (std::uint64_t t = 1; t < pts; ++t)
          if (c.at_point(lift_point(dom, cf.point_at(t))) != first)
            return false;
        return true;
      },
      parallel);
  if (!hit) return std::nullopt;
  AffineFlat flat = lift_flat(dom, flats.at(*hit));
  return MonoFlatHit{flat, c.at_point(flat.point_at(0))};
}

LineColouring::LineColouring(const Field& f, int n, int colours,
                             std::vector<std::uint8_t> values)
    : field_(f), n_(n), colours_(colours), values_(std::move(values)) {
  if (colours_ < 1) throw std::invalid_argument("colour count must be positive");
  std::vector<FqVec> gens = lines_of(Subspace::full(f, n));
  if (values_.size() != gens.size())
    throw std::invalid_argument("line colour list does not match the line count");
  for (std::uint8_t v : values_)
    if (v >= colours_) throw std::invalid_argument("colour value out of range");
  line_of_rank_.assign(point_count(f.q(), n), 0);
  for (std::uint32_t i = 0; i < gens.size(); ++i)
    for (int a = 1; a < f.q(); ++a)
      line_of_rank_[rank_of(gens[i].scaled(std::uint8_t(a)))] = i;
}

LineColouring LineColouring::from_index(const Field& f, int n, int colours,
                                        std::uint64_t index) {
  std::uint64_t total = (point_count(f.q(), n) - 1) / std::uint64_t(f.q() - 1);
  std::vector<std::uint8_t> vals(total);
  std::uint64_t rest = index;
  for (std::uint64_t i = 0; i < total; ++i) {
    vals[i] = std::uint8_t(rest % std::uint64_t(colours));
    rest /= std::uint64_t(colours);
  }
  if (rest != 0)
    throw std::invalid_argument("colouring index exceeds the colouring count");
  return LineColouring(f, n, colours, std::move(vals));
}

std::uint8_t LineColouring::at_line_of(const FqVec& member) const {
  if (member.dim() != n_ || member.field() != field_)
    throw std::invalid_argument("vector lies outside the line colouring's space");
  if (member.is_zero())
    throw std::invalid_argument("the zero vector spans no line");
  return values_[line_of_rank_[rank_of(member)]];
}

std::optional<LineMonoHit> find_line_mono_subspace(const LineColouring& c,
                                                   int d, bool parallel) {
  if (d < 0 || d > c.ambient())
    throw std::invalid_argument("subspace dimension exceeds the ambient");
  SubspaceIndexer subs(c.field(), c.ambient(), d);
  auto hit = least_satisfying(
      subs.count(),
      [&](std::uint64_t idx) {
        std::vector<FqVec> gens = lines_of(subs.at(idx));
        if (gens.empty()) return true;
        std::uint8_t first = c.at_line_of(gens[0]);
        for (std::size_t i = 1; i < gens.size(); ++i)
          if (c.at_line_of(gens[i]) != first) return false;
        return true;
      },
      parallel);
  if (!hit) return std::nullopt;
  Subspace s = subs.at(*hit);
  std::vector<FqVec> gens = lines_of(s);
  std::uint8_t colour = gens.empty() ? 0 : c.at_line_of(gens[0]);
  return LineMonoHit{s, colour};
}

GlrResult glr_number_empirical(const Field& f, int colours, int d, int t,
                               int n_cap, const Budget& budget, bool parallel) {
  if (colours < 1) throw std::invalid_argument("colour count must be positive");
  if (d < 0) throw std::invalid_argument("target dimension must be nonnegative");
  if (t != 0 && t != 1)
    throw std::invalid_argument("t selects points (0) or lines (1)");
  GlrResult out;
  for (int n = d; n <= n_cap; ++n) {
    std::uint64_t units =
        t == 0 ? point_count(f.q(), n)
               : (point_count(f.q(), n) - 1) / std::uint64_t(f.q() - 1);
    auto total = checked_pow(std::uint64_t(colours), units,
                             budget.max_colourings);
    if (!total)
      throw BudgetError("colouring count at n=" + std::to_string(n) +
                        " exceeds the budget");
    // Digit extraction table: colour of unit u under colouring idx is
    // (idx / pow[u]) % colours.
    std::vector<std::uint64_t> pow(units, 1);
    for (std::uint64_t u = 1; u < units; ++u)
      pow[u] = pow[u - 1] * std::uint64_t(colours);

    std::optional<std::uint64_t> failing;
    if (t == 0) {
      FlatIndexer flats(f, n, d);
      std::vector<std::vector<std::uint64_t>> flat_ranks(flats.count());
      for (std::uint64_t i = 0; i < flats.count(); ++i) {
        AffineFlat fl = flats.at(i);
        for (std::uint64_t p = 0; p < fl.size(); ++p)
          flat_ranks[i].push_back(rank_of(fl.point_at(p)));
      }
      failing = least_satisfying(
          *total,
          [&](std::uint64_t idx) {
            for (const auto& ranks : flat_ranks) {
              std::uint64_t c0 = (idx / pow[ranks[0]]) % std::uint64_t(colours);
              bool mono = true;
              for (std::size_t j = 1; j < ranks.size() && mono; ++j)
                mono = (idx / pow[ranks[j]]) % std::uint64_t(colours) == c0;
              if (mono) return false;
            }
            return true;
          },
          parallel);
    } else {
      std::vector<FqVec> gens = lines_of(Subspace::full(f, n));
      std::vector<std::uint32_t> line_of_rank(point_count(f.q(), n), 0);
      for (std::uint32_t i = 0; i < gens.size(); ++i)
        for (int a = 1; a < f.q(); ++a)
          line_of_rank[rank_of(gens[i].scaled(std::uint8_t(a)))] = i;
      SubspaceIndexer subs(f, n, d);
      std::vector<std::vector<std::uint32_t>> sub_lines(subs.count());
      for (std::uint64_t i = 0; i < subs.count(); ++i)
        for (const FqVec& g : lines_of(subs.at(i)))
          sub_lines[i].push_back(line_of_rank[rank_of(g)]);
      failing = least_satisfying(
          *total,
          [&](std::uint64_t idx) {
            for (const auto& ls : sub_lines) {
              if (ls.empty()) return false;
              std::uint64_t c0 = (idx / pow[ls[0]]) % std::uint64_t(colours);
              bool mono = true;
              for (std::size_t j = 1; j < ls.size() && mono; ++j)
                mono = (idx / pow[ls[j]]) % std::uint64_t(colours) == c0;
              if (mono) return false;
            }
            return true;
          },
          parallel);
    }
    out.evidence.push_back(GlrEvidence{n, *total, failing});
    if (!failing) {
      out.value = n;
      return out;
    }
  }
  return out;
}

namespace {

struct HindmanState {
  const Colouring* c = nullptr;
  int n = 0, m = 0;
  std::uint64_t nodes = 0, max_nodes = 0;
  std::vector<FqVec> chain;
  std::vector<FqVec> sums;
  std::uint8_t target = 0;

  bool extend(int maxbit_prev) {
    const Field& f = this->c->field();
    std::uint64_t step = std::uint64_t(1) << (maxbit_prev + 1);
    std::uint64_t total = std::uint64_t(1) << n;
    for (std::uint64_t r = step; r < total; r += step) {
      if (++nodes > max_nodes) throw BudgetError("sum-system search budget exceeded");
      FqVec v = vec_of_rank(f, n, r);
      std::uint8_t want = chain.empty() ? this->c->at_point(v) : target;
      if (this->c->at_point(v) != want) continue;
      bool ok = true;
      for (const FqVec& s : sums)
        if (this->c->at_point(s + v) != want) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::size_t old_sums = sums.size();
      for (std::size_t i = 0; i < old_sums; ++i) sums.push_back(sums[i] + v);
      sums.push_back(v);
      chain.push_back(v);
      if (chain.size() == 1) target = want;
      if (int(chain.size()) == m) return true;
      int maxbit = *support_stats(v).maxsup;
      if (extend(maxbit)) return true;
      chain.pop_back();
      sums.erase(sums.begin() + std::ptrdiff_t(old_sums), sums.end());
    }
    return false;
  }
};

}  // namespace

std::optional<SumSystem> hindman_sums_search(const Colouring& c, int m,
                                             const Budget& budget) {
  if (m <= 0) throw std::invalid_argument("system length must be positive");
  if (c.field().q() != 2)
    throw std::invalid_argument("sum systems are searched over GF(2)");
  const AffineFlat& dom = c.domain();
  if (dom.dim() != dom.ambient())
    throw std::invalid_argument("sum-system search needs a full-space domain");
  HindmanState st;
  st.c = &c;
  st.n = dom.ambient();
  st.m = m;
  st.max_nodes = budget.max_nodes;
  if (!st.extend(-1)) return std::nullopt;
  return SumSystem{st.chain, st.target};
}

ExhaustiveVerdict hindman_exhaustive(const Field& f, int n, int m, int colours,
                                     const Budget& budget, bool parallel) {
  if (f.q() != 2)
    throw std::invalid_argument("sum systems are searched over GF(2)");
  auto total = checked_pow(std::uint64_t(colours), point_count(2, n),
                           budget.max_colourings);
  if (!total) throw BudgetError("colouring count exceeds the budget");
  Budget inner = budget;
  inner.max_nodes = std::uint64_t(-1);
  auto failing = least_satisfying(
      *total,
      [&](std::uint64_t idx) {
        Colouring c = Colouring::from_index(f, n, colours, idx);
        return !hindman_sums_search(c, m, inner).has_value();
      },
      parallel);
  return ExhaustiveVerdict{!failing.has_value(), *total, failing};
}

std::optional<VdwWitness> vdw_search(const std::vector<std::uint8_t>& values,
                                     int len) {
  if (len < 1) throw std::invalid_argument("progression length must be positive");
  std::int64_t N = std::int64_t(values.size());
  if (len == 1)
    return N > 0 ? std::optional<VdwWitness>(VdwWitness{0, 1, values[0]})
                 : std::nullopt;
  for (std::int64_t a = 0; a < N; ++a) {
    for (std::int64_t x = 1; a + std::int64_t(len - 1) * x < N; ++x) {
      std::uint8_t c0 = values[a];
      bool mono = true;
      for (int i = 1; i < len && mono; ++i) mono = values[a + i * x] == c0;
      if (mono) return VdwWitness{a, x, c0};
    }
  }
  return std::nullopt;
}

ExhaustiveVerdict vdw_exhaustive(int N, int len, int colours,
                                 const Budget& budget, bool parallel) {
  if (N < 0) throw std::invalid_argument("interval length must be nonnegative");
  if (colours < 1) throw std::invalid_argument("colour count must be positive");
  auto total = checked_pow(std::uint64_t(colours), std::uint64_t(N),
                           budget.max_colourings);
  if (!total) throw BudgetError("colouring count exceeds the budget");
  auto failing = least_satisfying(
      *total,
      [&](std::uint64_t idx) {
        std::vector<std::uint8_t> vals(N);
        std::uint64_t rest = idx;
        for (int i = 0; i < N; ++i) {
          vals[i] = std::uint8_t(rest % std::uint64_t(colours));
          rest /= std::uint64_t(colours);
        }
        return !vdw_search(vals, len).has_value();
      },
      parallel);
  return ExhaustiveVerdict{!failing.has_value(), *total, failing};
}

IntervalColouring read_interval_colouring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open colouring file: " + path);
  std::int64_t N = -1;
  int one = 0, k = 0;
  if (!(in >> N >> one >> k))
    throw std::invalid_argument("interval header must be three integers: N 1 k");
  if (one != 1)
    throw std::invalid_argument("interval colourings are one-dimensional");
  if (N < 0) throw std::invalid_argument("interval length must be nonnegative");
  if (k < 1 || k > 36)
    throw std::invalid_argument("colour count must be between 1 and 36");
  IntervalColouring out;
  out.N = N;
  out.colours = k;
  out.values.reserve(N);
  char ch;
  while (std::int64_t(out.values.size()) < N && in.get(ch)) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    int v = -1;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'a' && ch <= 'z') v = 10 + (ch - 'a');
    if (v < 0 || v >= k) throw std::invalid_argument("colour digit out of range");
    out.values.push_back(std::uint8_t(v));
  }
  if (std::int64_t(out.values.size()) < N)
    throw std::invalid_argument("colouring file is shorter than the point count");
  while (in.get(ch))
    if (!std::isspace(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("trailing data after the colour digits");
  return out;
}

}  // namespace vecram
