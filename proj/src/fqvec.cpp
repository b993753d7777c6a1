#include "vecram/fqvec.hpp"

#include <sstream>
#include <stdexcept>

namespace vecram {

FqVec::FqVec(Field f, std::vector<std::uint8_t> coords)
    : field_(std::move(f)), c_(std::move(coords)) {
  for (std::uint8_t v : c_)
    if (v >= field_.q()) throw std::invalid_argument("coordinate out of field range");
}

bool FqVec::is_zero() const {
  for (std::uint8_t v : c_)
    if (v != 0) return false;
  return true;
}

FqVec FqVec::operator+(const FqVec& o) const {
  if (dim() != o.dim() || field_ != o.field_)
    throw std::invalid_argument("vector shape mismatch");
  FqVec r(field_, dim());
  for (int i = 0; i < dim(); ++i) r.c_[i] = field_.add(c_[i], o.c_[i]);
  return r;
}

FqVec FqVec::operator-(const FqVec& o) const {
  if (dim() != o.dim() || field_ != o.field_)
    throw std::invalid_argument("vector shape mismatch");
  FqVec r(field_, dim());
  for (int i = 0; i < dim(); ++i) r.c_[i] = field_.sub(c_[i], o.c_[i]);
  return r;
}

FqVec FqVec::scaled(std::uint8_t c) const {
  FqVec r(field_, dim());
  for (int i = 0; i < dim(); ++i) r.c_[i] = field_.mul(c_[i], c);
  return r;
}

SupportStats support_stats(const FqVec& f) {
  SupportStats s;
  for (int i = 0; i < f.dim(); ++i)
    if (f[i] != 0) s.support.push_back(i);
  if (!s.support.empty()) {
    s.minsup = s.support.front();
    s.maxsup = s.support.back();
    s.check = f[s.support.front()];
    s.hat = f[s.support.back()];
  }
  return s;
}

int osc(const FqVec& f) {
  int changes = 0;
  std::uint8_t prev = 0;
  bool seen = false;
  for (int i = 0; i < f.dim(); ++i) {
    if (f[i] == 0) continue;
    if (seen && f[i] != prev) ++changes;
    prev = f[i];
    seen = true;
  }
  return changes;
}

bool precedes(const FqVec& f, const FqVec& g) {
  int fmax = -1;
  for (int i = f.dim() - 1; i >= 0; --i)
    if (f[i] != 0) {
      fmax = i;
      break;
    }
  if (fmax < 0) return true;  // empty support: max = -inf
  int gmin = -1;
  for (int i = 0; i < g.dim(); ++i)
    if (g[i] != 0) {
      gmin = i;
      break;
    }
  if (gmin < 0) return true;  // empty support: min = +inf
  return fmax < gmin;
}

std::uint64_t rank_of(const FqVec& f) {
  std::uint64_t r = 0;
  for (int i = f.dim() - 1; i >= 0; --i) r = r * f.field().q() + f[i];
  return r;
}

FqVec vec_of_rank(const Field& f, int n, std::uint64_t r) {
  FqVec v(f, n);
  for (int i = 0; i < n; ++i) {
    v.set(i, std::uint8_t(r % f.q()));
    r /= f.q();
  }
  if (r != 0) throw std::invalid_argument("rank out of range for dimension");
  return v;
}

std::uint64_t point_count(int q, int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > UINT64_MAX / std::uint64_t(q))
      throw std::overflow_error("point count exceeds 64 bits");
    r *= std::uint64_t(q);
  }
  return r;
}

std::string to_literal(const FqVec& f) {
  std::ostringstream os;
  os << f.field().q() << ':' << f.dim() << ':';
  for (int i = 0; i < f.dim(); ++i) {
    if (i) os << ',';
    os << int(f[i]);
  }
  return os.str();
}

namespace {

FqVec parse_literal_impl(const std::string& s, const Field* expected) {
  std::istringstream is(s);
  int q = 0, n = 0;
  char c1 = 0, c2 = 0;
  if (!(is >> q >> c1 >> n >> c2) || c1 != ':' || c2 != ':')
    throw std::invalid_argument("bad vector literal: " + s);
  if (n < 0) throw std::invalid_argument("bad vector literal: " + s);
  Field f = expected ? *expected : Field::make(q);
  if (expected && expected->q() != q)
    throw std::invalid_argument("vector literal field mismatch: " + s);
  std::vector<std::uint8_t> coords;
  coords.reserve(n);
  for (int i = 0; i < n; ++i) {
    int v = 0;
    if (i && is.get() != ',') throw std::invalid_argument("bad vector literal: " + s);
    if (!(is >> v) || v < 0 || v >= q)
      throw std::invalid_argument("bad vector literal: " + s);
    coords.push_back(std::uint8_t(v));
  }
  std::string rest;
  if (is >> rest) throw std::invalid_argument("bad vector literal: " + s);
  return FqVec(f, std::move(coords));
}

}  // namespace

FqVec parse_literal(const std::string& s) { return parse_literal_impl(s, nullptr); }

FqVec parse_literal(const std::string& s, const Field& expected) {
  return parse_literal_impl(s, &expected);
}

}  // namespace vecram
