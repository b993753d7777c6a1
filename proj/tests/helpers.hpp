#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "vecram/colouring.hpp"
#include "vecram/fqvec.hpp"
#include "vecram/subspace.hpp"

namespace tst {

inline vecram::FqVec vec(const vecram::Field& f,
                         std::initializer_list<int> cs) {
  std::vector<std::uint8_t> c;
  for (int v : cs) c.push_back(std::uint8_t(v));
  return vecram::FqVec(f, std::move(c));
}

inline vecram::FqVec unit(const vecram::Field& f, int n, int i) {
  vecram::FqVec v(f, n);
  v.set(i, 1);
  return v;
}

inline vecram::Colouring full_colouring(const vecram::Field& f, int n, int k,
                                        std::vector<std::uint8_t> vals) {
  return vecram::Colouring(vecram::AffineFlat::full_space(f, n), k,
                           std::move(vals));
}

// Digits '0'..'9' only; enough for every test in this suite.
inline vecram::Colouring full_colouring(const vecram::Field& f, int n, int k,
                                        const char* digits) {
  std::vector<std::uint8_t> vals;
  for (; *digits; ++digits) vals.push_back(std::uint8_t(*digits - '0'));
  return full_colouring(f, n, k, std::move(vals));
}

}  // namespace tst
