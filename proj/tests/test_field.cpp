#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "vecram/field.hpp"

using vecram::Field;

namespace {

void check_axioms(const Field& f) {
  const int q = f.q();
  for (int a = 0; a < q; ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.add(a, f.neg(a)) == 0);
    CHECK(f.mul(a, 0) == 0);
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    for (int b = 0; b < q; ++b) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      for (int c = 0; c < q; ++c) {
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

}  // namespace

TEST_CASE("field axioms hold exhaustively for q up to 16") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) check_axioms(Field::make(q));
}

TEST_CASE("prime field arithmetic") {
  Field f2 = Field::make(2);
  CHECK(f2.add(1, 1) == 0);
  Field f3 = Field::make(3);
  CHECK(f3.mul(2, 2) == 1);
  CHECK(f3.characteristic() == 3);
  CHECK(f3.degree() == 1);
  CHECK(f3.modulus().empty());
}

TEST_CASE("GF(4) multiplies polynomials modulo x^2+x+1") {
  Field f = Field::make(4);
  CHECK(f.modulus() == std::vector<int>{1, 1, 1});
  CHECK(f.mul(2, 2) == 3);  // x * x = x + 1
  CHECK(f.mul(2, 3) == 1);  // x * (x+1) = x^2 + x = 1
  CHECK(f.add(2, 3) == 1);
  CHECK(f.inv(2) == 3);
  CHECK(f.characteristic() == 2);
  CHECK(f.degree() == 2);
}

TEST_CASE("default moduli are the least irreducible encodings") {
  CHECK(Field::make(8).modulus() == std::vector<int>{1, 1, 0, 1});
  CHECK(Field::make(16).modulus() == std::vector<int>{1, 1, 0, 0, 1});
  CHECK(Field::make(9).modulus() == std::vector<int>{1, 0, 1});
}

TEST_CASE("explicit modulus matching the default gives the same field") {
  Field a = Field::make(4);
  Field b = Field::make(4, {1, 1, 1});
  CHECK(a == b);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(a.mul(x, y) == b.mul(x, y));
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(Field::make(1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(6), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(12), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(257), std::invalid_argument);
  // x^2 + 1 = (x+1)^2 over F_2.
  CHECK_THROWS_AS(Field::make(4, {1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(4, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(3, {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2).inv(0), std::domain_error);
}

TEST_CASE("fields share tables across copies") {
  Field a = Field::make(5);
  Field b = a;
  CHECK(a == b);
  CHECK(b.mul(3, 4) == (3 * 4) % 5);
}
