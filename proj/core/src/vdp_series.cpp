#include "canard/vdp_series.hpp"

#include "canard/errors.hpp"

namespace canard {

// The v_n share the single pole u = -1: v_n = P_n(u)/(u+1)^{3n+1}.  Working
// directly on the numerators P_n keeps every step a dense polynomial
// operation; the common denominators are tracked by exponent arithmetic.
//
//   v_n' = D_n/(u+1)^{3n+2},  D_n = (u+1) P_n' - (3n+1) P_n
//   sum_j v_j v'_{n-j} = S_n/(u+1)^{3n+3},  S_n = sum_j P_j D_{n-j}
//   a_{n+1} = S_n(1)/2^{3n+3}
//   P_{n+1} = -(S_n - a_{n+1} (u+1)^{3n+3})/(u-1)   (exact division)
VdpSeries vdp_series(unsigned N) {
    VdpSeries out;
    out.a.reserve(N + 1);
    out.v.reserve(N + 1);
    out.a.push_back(Rat(1));

    std::vector<Poly> P;
    P.push_back(Poly::constant(Rat(-1)));

    const Poly up1({Rat(1), Rat(1)});  // u + 1
    std::vector<Poly> up1_pow;         // (u+1)^k as needed
    up1_pow.push_back(Poly::constant(Rat(1)));
    auto up1_power = [&](unsigned k) -> const Poly& {
        while (up1_pow.size() <= k) up1_pow.push_back(up1_pow.back() * up1);
        return up1_pow[k];
    };

    std::vector<Poly> D;
    for (unsigned n = 0; n < N; ++n) {
        D.push_back(up1 * P[n].derivative() - P[n] * Rat(3 * static_cast<long>(n) + 1));
        Poly S;
        for (unsigned j = 0; j <= n; ++j) S = S + P[j] * D[n - j];
        Rat a_next = S.eval(Rat(1)) / Rat(Int(1) << (3 * n + 3));
        out.a.push_back(a_next);
        Poly T = S - up1_power(3 * n + 3) * a_next;
        P.push_back(-poly_div_exact_linear(T, Rat(1)));
    }

    for (unsigned n = 0; n <= N; ++n) out.v.emplace_back(P[n], Rat(-1), 3 * n + 1);
    return out;
}

}  // namespace canard
