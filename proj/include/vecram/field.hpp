#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace vecram {

// Dense arithmetic tables for GF(q), q = p^m <= 256.
//
// Element codes run 0..q-1.  For extension fields a code is the coefficient
// vector of a polynomial over F_p read as a base-p integer: digit i of the
// code is the coefficient of x^i.  Multiplication reduces modulo a monic
// irreducible polynomial of degree m; when none is supplied, the irreducible
// candidate with the least base-p integer encoding is used.
//
// Copies share the underlying tables, so Field is cheap to pass by value and
// safe to read from many threads at once.
class Field {
 public:
  static Field make(int q);
  static Field make(int q, const std::vector<int>& modulus);

  int q() const { return t_->q; }
  int characteristic() const { return t_->p; }
  int degree() const { return t_->m; }

  // Coefficients of the reduction polynomial, ascending degree, monic.
  // Empty for prime fields.
  const std::vector<int>& modulus() const { return t_->modulus; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return t_->add[idx(a, b)]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return t_->mul[idx(a, b)]; }
  std::uint8_t neg(std::uint8_t a) const { return t_->neg[a]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg(b)); }
  std::uint8_t inv(std::uint8_t a) const;  // throws std::domain_error on a == 0
  std::uint8_t div(std::uint8_t a, std::uint8_t b) const { return mul(a, inv(b)); }

  bool operator==(const Field& o) const {
    return t_->q == o.t_->q && t_->modulus == o.t_->modulus;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  struct Tables {
    int q = 0, p = 0, m = 0;
    std::vector<int> modulus;
    std::vector<std::uint8_t> add, mul, neg, inv;
  };

  std::size_t idx(std::uint8_t a, std::uint8_t b) const {
    return std::size_t(a) * t_->q + b;
  }

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

}  // namespace vecram
