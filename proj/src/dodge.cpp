#include "vecram/dodge.hpp"

#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

#include "vecram/kernels.hpp"

namespace vecram {

const Rat& RationalSeq::at(std::size_t i) {
  while (vals_.size() <= i) grow();
  return vals_[i];
}

void RationalSeq::grow() {
  if (h_ == 0) {
    vals_.push_back(Rat(0));
    vals_.push_back(Rat(1));
    vals_.push_back(Rat(-1));
    h_ = 1;
    return;
  }
  ++h_;
  for (long long den = 1; den <= h_; ++den) {
    long long lo = den == h_ ? 1 : h_;
    for (long long num = lo; num <= h_; ++num) {
      if (std::gcd(num, den) != 1) continue;
      vals_.push_back(Rat(num, den));
      vals_.push_back(Rat(-num, den));
    }
  }
}

QVec QLine::point(const Rat& t) const {
  return qvec_add(base, qvec_scaled(dir, t));
}

std::optional<Rat> QLine::param(const QVec& p) const {
  // dir[pivot] = 1 and base[pivot] = 0, so the parameter is read off directly.
  Rat t = p[pivot];
  return point(t) == p ? std::optional<Rat>(t) : std::nullopt;
}

bool QLine::contains(const QVec& p) const { return param(p).has_value(); }

LineEnum::LineEnum(int n, const std::string& scheme, std::uint64_t seed)
    : n_(n), seed_(seed) {
  if (n < 2)
    throw std::invalid_argument("line enumeration needs dimension at least 2");
  if (scheme != "diag_lines_v1")
    throw std::invalid_argument("unknown line enumeration scheme: " + scheme);
}

const QLine& LineEnum::at(std::size_t i) {
  while (lines_.size() <= i) grow();
  return lines_[i];
}

namespace {

// Compositions of s into `parts` nonnegative parts, lexicographically
// ascending, fed to the consumer one tuple at a time.
template <class Fn>
void compositions(long long s, int parts, std::vector<long long>& tuple,
                  Fn&& fn) {
  if (parts == 1) {
    tuple.push_back(s);
    fn(tuple);
    tuple.pop_back();
    return;
  }
  for (long long head = 0; head <= s; ++head) {
    tuple.push_back(head);
    compositions(s - head, parts - 1, tuple, fn);
    tuple.pop_back();
  }
}

}  // namespace

void LineEnum::grow() {
  ++weight_;
  for (int p = 0; p < n_; ++p) {
    int dir_parts = n_ - 1 - p;
    int base_parts = n_ - 1;
    int parts = dir_parts + base_parts;
    std::vector<long long> tuple;
    compositions(weight_, parts, tuple, [&](const std::vector<long long>& t) {
      QLine line;
      line.pivot = p;
      line.dir.assign(n_, Rat(0));
      line.base.assign(n_, Rat(0));
      line.dir[p] = 1;
      int at = 0;
      for (int j = p + 1; j < n_; ++j) line.dir[j] = seq_.at(t[at++]);
      for (int j = 0; j < n_; ++j)
        if (j != p) line.base[j] = seq_.at(t[at++]);
      lines_.push_back(std::move(line));
    });
  }
}

namespace {

// Parameter (on L) of the unique intersection of L with the line through a
// and b, when exactly one exists.
std::optional<Rat> secant_param(const QLine& l, const QVec& a, const QVec& b) {
  QVec w = qvec_sub(b, a);
  QVec rhs = qvec_sub(a, l.base);
  // Solve t*dir - u*w = rhs over the coordinates.
  std::size_t n = w.size();
  std::size_t r1 = n;
  for (std::size_t r = 0; r < n; ++r)
    if (l.dir[r] != 0 || w[r] != 0) {
      r1 = r;
      break;
    }
  if (r1 == n) return std::nullopt;  // both directions zero: degenerate
  std::size_t r2 = n;
  for (std::size_t r = r1 + 1; r < n; ++r)
    if (l.dir[r1] * w[r] != l.dir[r] * w[r1]) {
      r2 = r;
      break;
    }
  if (r2 == n) return std::nullopt;  // parallel directions: no single point
  Rat det = l.dir[r1] * (-w[r2]) - l.dir[r2] * (-w[r1]);
  Rat t = (rhs[r1] * (-w[r2]) - rhs[r2] * (-w[r1])) / det;
  Rat u = (l.dir[r1] * rhs[r2] - l.dir[r2] * rhs[r1]) / det;
  for (std::size_t r = 0; r < n; ++r)
    if (l.dir[r] * t - w[r] * u != rhs[r]) return std::nullopt;  // skew
  return t;
}

}  // namespace

DodgeSet dodge_lines(int n, int lines, const std::string& scheme,
                     std::uint64_t seed) {
  if (lines < 0) throw std::invalid_argument("line count must be nonnegative");
  LineEnum en(n, scheme, seed);
  DodgeSet out;
  out.n = n;
  out.scheme = scheme;
  out.seed = seed;
  RationalSeq params;
  for (int i = 0; i < lines; ++i) {
    const QLine& line = en.at(i);
    std::size_t hit = out.points.size();
    for (std::size_t j = 0; j < out.points.size(); ++j)
      if (line.contains(out.points[j])) {
        hit = j;
        break;
      }
    if (hit < out.points.size()) {
      out.owner.push_back(hit);
      continue;
    }
    std::set<Rat> forbidden;
    for (std::size_t a = 0; a < out.points.size(); ++a)
      for (std::size_t b = a + 1; b < out.points.size(); ++b)
        if (auto t = secant_param(line, out.points[a], out.points[b]))
          forbidden.insert(*t);
    for (std::size_t s = 0;; ++s) {
      const Rat& t = params.at(s);
      if (forbidden.count(t)) continue;
      out.points.push_back(line.point(t));
      out.owner.push_back(out.points.size() - 1);
      break;
    }
  }
  return out;
}

std::optional<std::array<std::size_t, 3>> first_collinear_triple(
    const std::vector<QVec>& pts, bool parallel) {
  std::size_t m = pts.size();
  auto has_triple_at = [&](std::uint64_t i) {
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        if (collinear(pts[i], pts[j], pts[k])) return true;
    return false;
  };
  auto i = least_satisfying(m, has_triple_at, parallel);
  if (!i) return std::nullopt;
  for (std::size_t j = *i + 1; j < m; ++j)
    for (std::size_t k = j + 1; k < m; ++k)
      if (collinear(pts[*i], pts[j], pts[k]))
        return std::array<std::size_t, 3>{std::size_t(*i), j, k};
  return std::nullopt;  // unreachable
}

bool no_three_collinear(const std::vector<QVec>& pts, bool parallel) {
  return !first_collinear_triple(pts, parallel).has_value();
}

}  // namespace vecram
