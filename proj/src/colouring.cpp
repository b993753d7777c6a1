#include "vecram/colouring.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vecram {

namespace {

char digit_char(std::uint8_t v) {
  return v < 10 ? char('0' + v) : char('a' + (v - 10));
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
  return -1;
}

}  // namespace

Colouring::Colouring(AffineFlat domain, int colours,
                     std::vector<std::uint8_t> values)
    : domain_(std::move(domain)), colours_(colours), values_(std::move(values)) {
  if (colours_ < 1) throw std::invalid_argument("colour count must be positive");
  if (values_.size() != domain_.size())
    throw std::invalid_argument("colour list does not match the domain size");
  for (std::uint8_t v : values_)
    if (v >= colours_)
      throw std::invalid_argument("colour value out of range");
}

Colouring Colouring::from_index(const Field& f, int n, int colours,
                                std::uint64_t index) {
  if (colours < 1) throw std::invalid_argument("colour count must be positive");
  std::uint64_t total = point_count(f.q(), n);
  std::vector<std::uint8_t> vals(total);
  std::uint64_t rest = index;
  for (std::uint64_t t = 0; t < total; ++t) {
    vals[t] = std::uint8_t(rest % std::uint64_t(colours));
    rest /= std::uint64_t(colours);
  }
  if (rest != 0)
    throw std::invalid_argument("colouring index exceeds the colouring count");
  return Colouring(AffineFlat::full_space(f, n), colours, std::move(vals));
}

Colouring Colouring::read(std::istream& in) {
  int q = 0, n = -1, k = 0;
  if (!(in >> q >> n >> k))
    throw std::invalid_argument("colouring header must be three integers: q n k");
  if (n < 0) throw std::invalid_argument("dimension must be nonnegative");
  if (k < 1 || k > 36)
    throw std::invalid_argument("colour count must be between 1 and 36");
  Field f = Field::make(q);
  std::uint64_t total = point_count(f.q(), n);
  std::vector<std::uint8_t> vals;
  vals.reserve(total);
  char c;
  while (vals.size() < total && in.get(c)) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    int v = digit_value(c);
    if (v < 0 || v >= k)
      throw std::invalid_argument("colour digit out of range");
    vals.push_back(std::uint8_t(v));
  }
  if (vals.size() < total)
    throw std::invalid_argument("colouring file is shorter than the point count");
  while (in.get(c)) {
    if (!std::isspace(static_cast<unsigned char>(c)))
      throw std::invalid_argument("trailing data after the colour digits");
  }
  return Colouring(AffineFlat::full_space(f, n), k, std::move(vals));
}

Colouring Colouring::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open colouring file: " + path);
  return read(in);
}

void Colouring::write(std::ostream& out) const {
  const Field& f = field();
  if (domain_.dim() != domain_.ambient())
    throw std::logic_error("only full-space colourings have a file form");
  if (colours_ > 36)
    throw std::logic_error("file form limited to 36 colours");
  out << f.q() << ' ' << domain_.ambient() << ' ' << colours_ << '\n';
  for (std::uint8_t v : values_) out << digit_char(v);
  out << '\n';
}

std::uint8_t Colouring::at_index(std::uint64_t t) const {
  if (t >= values_.size()) throw std::out_of_range("point index out of range");
  return values_[t];
}

std::uint8_t Colouring::at_point(const FqVec& p) const {
  auto t = domain_.index_of(p);
  if (!t) throw std::invalid_argument("point lies outside the colouring domain");
  return values_[*t];
}

std::vector<std::uint8_t> line_profile(const Colouring& c, const FqVec& v,
                                       const FqVec& gen) {
  const Field& f = c.field();
  if (gen.is_zero()) throw std::invalid_argument("line generator must be nonzero");
  std::vector<std::uint8_t> out;
  out.reserve(f.q() - 1);
  for (int a = 1; a < f.q(); ++a) out.push_back(c.at_point(v + gen.scaled(a)));
  return out;
}

std::optional<EndClassClash> end_class_clash(const Colouring& c,
                                             const AffineFlat& region) {
  const Field& f = c.field();
  std::vector<std::optional<FqVec>> seen(f.q());
  std::uint64_t total = region.size();
  for (std::uint64_t t = 0; t < total; ++t) {
    FqVec p = region.point_at(t);
    std::uint8_t lead = support_stats(p).hat;
    auto& prev = seen[lead];
    if (!prev) {
      prev = p;
    } else if (c.at_point(*prev) != c.at_point(p)) {
      return EndClassClash{*prev, p, lead};
    }
  }
  return std::nullopt;
}

bool is_end_determined(const Colouring& c, const AffineFlat& region) {
  return !end_class_clash(c, region).has_value();
}

}  // namespace vecram
