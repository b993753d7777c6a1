#pragma once

#include <vector>

#include "vecram/subspace.hpp"

namespace vecram {

// Subspace of vectors of W vanishing on every coordinate <= x, i.e. with
// support entirely beyond x.  dim result >= dim W - (x+1); when that bound is
// not positive the result may be the zero space, flagged via dim_guaranteed.
struct ShiftResult {
  Subspace space;
  bool dim_guaranteed;  // dim W - (x+1) >= 1 held a priori
};
ShiftResult shift_support(const Subspace& w, int x);

// k-dimensional subspace of W on which coordinate x vanishes, built from the
// first k+1 basis rows: rows already vanishing at x are kept, the rest are
// normalized to value 1 at x and differenced against the first of them.
// Requires dim W >= k+1.
Subspace kill_coordinate(const Subspace& w, int x, int k);

// k-dimensional affine flat inside W on which coordinate x is constantly a.
// Base point a*(w(x))^-1 * w for the first basis row w with w(x) != 0;
// direction space from kill_coordinate.  Requires dim W >= k+1, and
// x in supp(W) unless a == 0.
AffineFlat fix_coordinate_affine(const Subspace& w, int x, std::uint8_t a, int k);

// m vectors f_0, ..., f_{m-1} of the flat's direction space with
// base << f_0 << f_1 << ... (strictly increasing support blocks), each chosen
// canonically (first basis row of the shifted subspace).  Throws AmbientError
// when the dimensions run out before m vectors are found.
std::vector<FqVec> extract_block_chain(const AffineFlat& flat, int m);

}  // namespace vecram
