#pragma once

#include <cstdint>
#include <vector>

#include "vecram/fqvec.hpp"

namespace vecram {

// Nonzero vectors whose supports sit strictly one above the next.  When
// matched, each entry's leading value equals the next entry's trailing value,
// which makes the oscillation of the total sum additive.
struct FlagChain {
  std::vector<FqVec> vectors;
  bool matched = false;
};

FlagChain make_flag_chain(std::vector<FqVec> vectors);

// Rescales entries left to right so consecutive ends agree.  Oscillation of
// each entry is unchanged (it is scaling-invariant); the result is matched.
FlagChain match_ends(const FlagChain& chain);

FqVec chain_sum(const FlagChain& chain);

// Combinations g_j = sum_{i<=j} a_i f_i + a_{j+1} sum_{i>j} f_i whose
// oscillations sweep the integer interval [s+1, s+n-1], where s is the
// oscillation of the plain sum.  Each value is recomputed by direct
// evaluation, so a mismatch raises instead of returning.
struct OscWitnesses {
  int s = 0;
  std::vector<FqVec> vectors;   // g_j for j = 0 .. n-2
  std::vector<int> osc_values;  // s+j+1
};

OscWitnesses osc_interval_witness(const FlagChain& chain,
                                  const std::vector<std::uint8_t>& coeffs);

}  // namespace vecram
