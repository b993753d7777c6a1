#include "vecram/field.hpp"

#include <stdexcept>
#include <string>

namespace vecram {
namespace {

// Polynomials over F_p: coefficient vectors, ascending degree, trailing
// zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Poly& f) { return int(f.size()) - 1; }  // deg(0) = -1

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

// Remainder of f modulo monic g.
Poly poly_mod(Poly f, const Poly& g, int p) {
  trim(f);
  while (deg(f) >= deg(g)) {
    int shift = deg(f) - deg(g);
    int c = f.back();
    for (std::size_t i = 0; i < g.size(); ++i) {
      int k = int(i) + shift;
      f[k] = ((f[k] - c * g[i]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

Poly poly_of_code(int code, int p) {
  Poly f;
  while (code > 0) {
    f.push_back(code % p);
    code /= p;
  }
  return f;
}

int code_of_poly(const Poly& f, int p) {
  int code = 0;
  for (int i = deg(f); i >= 0; --i) code = code * p + f[i];
  return code;
}

bool is_irreducible(const Poly& f, int p) {
  // Trial division by every monic polynomial of degree 1..deg(f)/2.
  int d = deg(f);
  for (int e = 1; 2 * e <= d; ++e) {
    int count = 1;
    for (int i = 0; i < e; ++i) count *= p;  // p^e choices of lower coefficients
    for (int low = 0; low < count; ++low) {
      Poly g = poly_of_code(low, p);
      g.resize(e + 1, 0);
      g[e] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct PrimePower {
  int p, m;
};

PrimePower factor_prime_power(int q) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  int p = 0;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};
  int m = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1)
    throw std::invalid_argument("field order " + std::to_string(q) +
                                " is not a prime power");
  return {p, m};
}

Poly least_irreducible(int p, int m) {
  // Monic degree-m candidates ordered by the base-p encoding of their lower
  // coefficients; the first irreducible one wins.
  int count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (int low = 0; low < count; ++low) {
    Poly f = poly_of_code(low, p);
    f.resize(m + 1, 0);
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

Field Field::make(int q) { return make(q, {}); }

Field Field::make(int q, const std::vector<int>& modulus) {
  if (q > 256) throw std::invalid_argument("field order above 256 not supported");
  auto [p, m] = factor_prime_power(q);

  auto t = std::make_shared<Tables>();
  t->q = q;
  t->p = p;
  t->m = m;

  Poly mod;
  if (m > 1) {
    if (modulus.empty()) {
      mod = least_irreducible(p, m);
    } else {
      mod = modulus;
      trim(mod);
      if (deg(mod) != m || mod.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree " +
                                    std::to_string(m));
      for (int c : mod)
        if (c < 0 || c >= p)
          throw std::invalid_argument("modulus coefficient out of range");
      if (!is_irreducible(mod, p))
        throw std::invalid_argument("modulus polynomial is reducible");
    }
    t->modulus = mod;
  } else if (!modulus.empty()) {
    throw std::invalid_argument("modulus only applies to extension fields");
  }

  t->add.resize(std::size_t(q) * q);
  t->mul.resize(std::size_t(q) * q);
  t->neg.resize(q);
  t->inv.assign(q, 0);

  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      std::size_t k = std::size_t(a) * q + b;
      if (m == 1) {
        t->add[k] = std::uint8_t((a + b) % p);
        t->mul[k] = std::uint8_t((a * b) % p);
      } else {
        // Coefficient-wise sum in base p.
        int s = 0, base = 1, x = a, y = b;
        while (x > 0 || y > 0) {
          s += ((x % p + y % p) % p) * base;
          x /= p;
          y /= p;
          base *= p;
        }
        t->add[k] = std::uint8_t(s);
        Poly prod = poly_mod(poly_mul(poly_of_code(a, p), poly_of_code(b, p), p), mod, p);
        t->mul[k] = std::uint8_t(code_of_poly(prod, p));
      }
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (t->add[std::size_t(a) * q + b] == 0) t->neg[a] = std::uint8_t(b);
      if (a != 0 && t->mul[std::size_t(a) * q + b] == 1) t->inv[a] = std::uint8_t(b);
    }
  }
  return Field(std::move(t));
}

std::uint8_t Field::inv(std::uint8_t a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  return t_->inv[a];
}

}  // namespace vecram
