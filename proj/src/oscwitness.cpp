#include "vecram/oscwitness.hpp"

#include <stdexcept>

namespace vecram {

namespace {

bool ends_match(const std::vector<FqVec>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (support_stats(v[i]).hat != support_stats(v[i + 1]).check) return false;
  return true;
}

void validate_chain(const std::vector<FqVec>& v) {
  if (v.empty()) throw std::invalid_argument("chain must be nonempty");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero())
      throw std::invalid_argument("chain entries must be nonzero");
    if (v[i].field() != v[0].field() || v[i].dim() != v[0].dim())
      throw std::invalid_argument("chain entries must share one space");
  }
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (!precedes(v[i], v[i + 1]))
      throw std::invalid_argument(
          "each entry's support must lie strictly below the next");
}

}  // namespace

FlagChain make_flag_chain(std::vector<FqVec> vectors) {
  validate_chain(vectors);
  bool m = ends_match(vectors);
  return FlagChain{std::move(vectors), m};
}

FlagChain match_ends(const FlagChain& chain) {
  validate_chain(chain.vectors);
  const Field& f = chain.vectors[0].field();
  std::vector<FqVec> out;
  out.reserve(chain.vectors.size());
  out.push_back(chain.vectors[0]);
  for (std::size_t i = 1; i < chain.vectors.size(); ++i) {
    std::uint8_t prev_hat = support_stats(out.back()).hat;
    std::uint8_t cur_check = support_stats(chain.vectors[i]).check;
    out.push_back(chain.vectors[i].scaled(f.mul(prev_hat, f.inv(cur_check))));
  }
  return FlagChain{std::move(out), true};
}

FqVec chain_sum(const FlagChain& chain) {
  validate_chain(chain.vectors);
  FqVec s = chain.vectors[0];
  for (std::size_t i = 1; i < chain.vectors.size(); ++i)
    s = s + chain.vectors[i];
  return s;
}

OscWitnesses osc_interval_witness(const FlagChain& chain,
                                  const std::vector<std::uint8_t>& coeffs) {
  validate_chain(chain.vectors);
  if (!chain.matched || !ends_match(chain.vectors))
    throw std::invalid_argument("chain must be matched first");
  const std::vector<FqVec>& v = chain.vectors;
  std::size_t n = v.size();
  const Field& f = v[0].field();
  if (f.q() == 2)
    throw std::invalid_argument(
        "distinct nonzero coefficients need at least three field elements");
  if (n < 2)
    throw std::invalid_argument("a single entry yields no interval");
  if (coeffs.size() != n)
    throw std::invalid_argument("one coefficient per chain entry required");
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs[i] == 0 || coeffs[i] >= f.q())
      throw std::invalid_argument("coefficients must be nonzero field codes");
    if (i + 1 < n && coeffs[i] == coeffs[i + 1])
      throw std::invalid_argument("consecutive coefficients must differ");
  }

  int s = osc(chain_sum(chain));
  int parts = 0;
  for (const FqVec& e : v) parts += osc(e);
  if (parts != s)
    throw std::logic_error("matched chain lost oscillation additivity");

  std::vector<FqVec> suffix(n, FqVec(f, v[0].dim()));
  for (std::size_t j = n - 1; j-- > 0;) suffix[j] = suffix[j + 1] + v[j + 1];

  OscWitnesses out;
  out.s = s;
  FqVec prefix(f, v[0].dim());
  for (std::size_t j = 0; j + 1 < n; ++j) {
    prefix = prefix + v[j].scaled(coeffs[j]);
    FqVec g = prefix + suffix[j].scaled(coeffs[j + 1]);
    int value = osc(g);
    if (value != s + int(j) + 1)
      throw std::logic_error("witness oscillation missed its slot");
    out.vectors.push_back(g);
    out.osc_values.push_back(value);
  }
  return out;
}

}  // namespace vecram
