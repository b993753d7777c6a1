#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace vecram {

// Exact arbitrary-precision rationals; normalization (positive denominator,
// reduced fraction) is maintained by the backing type.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using QVec = std::vector<Rat>;

// Text form "p/q" with q > 0 and gcd(p, q) = 1, or just "p" for integers.
std::string rat_str(const Rat& r);
Rat rat_parse(const std::string& s);

QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_scaled(const QVec& a, const Rat& c);
bool qvec_is_zero(const QVec& a);

// Three points lie on one affine line (degenerate cases count as collinear).
bool collinear(const QVec& p, const QVec& r, const QVec& s);

}  // namespace vecram
