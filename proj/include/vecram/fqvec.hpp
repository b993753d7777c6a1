#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vecram/field.hpp"

namespace vecram {

// Vector of fixed finite length over GF(q).  Treated as immutable once built;
// the arithmetic helpers return fresh vectors.
class FqVec {
 public:
  FqVec(Field f, int n) : field_(std::move(f)), c_(n, 0) {}
  FqVec(Field f, std::vector<std::uint8_t> coords);

  const Field& field() const { return field_; }
  int dim() const { return int(c_.size()); }
  std::uint8_t operator[](int i) const { return c_[i]; }
  const std::vector<std::uint8_t>& coords() const { return c_; }
  void set(int i, std::uint8_t v) { c_[i] = v; }

  bool is_zero() const;
  FqVec operator+(const FqVec& o) const;
  FqVec operator-(const FqVec& o) const;
  FqVec scaled(std::uint8_t c) const;
  bool operator==(const FqVec& o) const { return c_ == o.c_; }
  bool operator!=(const FqVec& o) const { return c_ != o.c_; }

 private:
  Field field_;
  std::vector<std::uint8_t> c_;
};

// Support data of a vector.  maxsup/minsup are empty for the zero vector
// (both conventionally minus infinity); hat/check are then 0.
struct SupportStats {
  std::vector<int> support;          // increasing coordinate indices
  std::optional<int> maxsup, minsup;
  std::uint8_t hat = 0;              // value at maxsup
  std::uint8_t check = 0;            // value at minsup
};

SupportStats support_stats(const FqVec& f);

// Number of value changes along the support read in increasing order.
int osc(const FqVec& f);

// Whole support of f lies strictly below the whole support of g.  Holds
// vacuously when either support is empty.
bool precedes(const FqVec& f, const FqVec& g);

// Integer encoding: rank(f) = sum coords[i] * q^i.  Inverse of vec_of_rank.
std::uint64_t rank_of(const FqVec& f);
FqVec vec_of_rank(const Field& f, int n, std::uint64_t r);

// q^n, throwing when the count does not fit in 64 bits.
std::uint64_t point_count(int q, int n);

// Literal form "q:n:c0,c1,...,c{n-1}".
std::string to_literal(const FqVec& f);
FqVec parse_literal(const std::string& s);
FqVec parse_literal(const std::string& s, const Field& expected);

}  // namespace vecram
