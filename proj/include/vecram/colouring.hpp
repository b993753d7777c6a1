#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vecram/fqvec.hpp"
#include "vecram/subspace.hpp"

namespace vecram {

// Colour assignment on the points of a flat, stored by point index in the
// flat's canonical enumeration order.
class Colouring {
 public:
  Colouring(AffineFlat domain, int colours, std::vector<std::uint8_t> values);

  // Colouring number `index` of the full space F_q^n in k colours: point t
  // gets digit t of index written base k.
  static Colouring from_index(const Field& f, int n, int colours,
                              std::uint64_t index);

  // Text format: header line "q n k", then one line of point colours as base-36
  // digits, point index ascending.  The domain is the full space F_q^n.
  static Colouring read(std::istream& in);
  static Colouring read_file(const std::string& path);
  void write(std::ostream& out) const;

  const AffineFlat& domain() const { return domain_; }
  const Field& field() const { return domain_.field(); }
  int colours() const { return colours_; }
  std::uint64_t size() const { return values_.size(); }

  std::uint8_t at_index(std::uint64_t t) const;
  std::uint8_t at_point(const FqVec& p) const;

 private:
  AffineFlat domain_;
  int colours_;
  std::vector<std::uint8_t> values_;
};

// Colour pattern along a punctured line through v: entry a-1 is the colour of
// v + a*gen for a = 1..q-1.
std::vector<std::uint8_t> line_profile(const Colouring& c, const FqVec& v,
                                       const FqVec& gen);

// Two points of a region with the same leading coefficient but different
// colours, if any exist.
struct EndClassClash {
  FqVec first, second;
  std::uint8_t value;  // shared leading coefficient
};

std::optional<EndClassClash> end_class_clash(const Colouring& c,
                                             const AffineFlat& region);

// True when the colour of every point of the region depends only on its
// leading coefficient.
bool is_end_determined(const Colouring& c, const AffineFlat& region);

}  // namespace vecram
