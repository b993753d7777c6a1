#include "vecram/rational.hpp"

#include <stdexcept>

namespace vecram {

std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("bad rational literal: ") + s);
  }
}

namespace {

void require_same_dim(const QVec& a, const QVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("vector dimensions differ");
}

}  // namespace

QVec qvec_add(const QVec& a, const QVec& b) {
  require_same_dim(a, b);
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
  require_same_dim(a, b);
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVec qvec_scaled(const QVec& a, const Rat& c) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

bool qvec_is_zero(const QVec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

bool collinear(const QVec& p, const QVec& r, const QVec& s) {
  require_same_dim(p, r);
  require_same_dim(p, s);
  QVec u = qvec_sub(r, p), v = qvec_sub(s, p);
  if (qvec_is_zero(u) || qvec_is_zero(v)) return true;
  // u and v parallel: every 2x2 minor vanishes.
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

}  // namespace vecram
