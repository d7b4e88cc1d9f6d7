#pragma once

#include <vector>

#include "canard/ratfunc.hpp"

namespace canard {

// Exact formal canard series of the Van der Pol equation at alpha = 1:
//   v(u) = sum v_n(u) eps^n,  alpha = sum a_n eps^n,
// computed from the recurrence
//   a_{n+1} = sum_{j=0}^n v_j(1) v'_{n-j}(1),
//   v_{n+1} = v_0 (sum_j v_j v'_{n-j} - a_{n+1}) / (u - 1),
// with a_0 = 1, v_0 = -1/(u+1).  Every division by (u-1) is exact; a nonzero
// remainder aborts the computation (it would mean the invariant is broken).
struct VdpSeries {
    std::vector<Rat> a;      // a_0..a_N
    std::vector<RatFunc> v;  // v_0..v_N, single pole at u = -1, order 3n+1
};

VdpSeries vdp_series(unsigned N);

}  // namespace canard
