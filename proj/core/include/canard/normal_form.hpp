#pragma once

#include <vector>

#include "canard/polynomial.hpp"
#include "canard/series.hpp"

namespace canard {

// Coefficient of eps^m is an x-series; all entries share one truncation order.
using EpsSeries = std::vector<Series>;

// Data of the normal form
//   eps y' = (x^p f(x) + eps g(x,eps)) y + h(x,eps)
//            + eps y^2 P(x,eps,eps y) + alpha(x,eps) Q(x,eps,y)
// with alpha(x,eps) = sum a_n(x) eps^n, deg a_n <= p-1, the unknown canard
// parameter series.  P is supplied by its powers of w = eps*y, Q by its powers
// of y.  Contract: the y-dependent coefficients Q[k], k >= 1, must have eps
// valuation >= 1, otherwise order n would couple to y_n nonlinearly and the
// triangular construction below would not apply.
struct NormalFormProblem {
    unsigned p = 1;
    Series f;                    // f(x); f(0) != 0
    EpsSeries g;                 // g(x,eps)
    EpsSeries h;                 // h(x,eps)
    std::vector<EpsSeries> P;    // P[k](x,eps) multiplies (eps y)^k
    std::vector<EpsSeries> Q;    // Q[k](x,eps) multiplies y^k; Q[0](0,0) != 0
    unsigned N_eps = 0;
    unsigned N_x = 0;
};

struct CanardFormalSolution {
    std::vector<Series> y;  // y_0..y_{N_eps}
    std::vector<Poly> a;    // a_0..a_{N_eps}, each of degree <= p-1
};

// Solve order by order: the eps^n balance reads
//   x^p f y_n + a_n(x) Q(x,0,0) = known(n)
// and a_n is the unique polynomial of degree <= p-1 cancelling the first p
// x-coefficients of known(n)/Q(x,0,0); y_n follows by exact series division.
CanardFormalSolution canard_formal(const NormalFormProblem& problem);

// The Brusselator reduced to the normal form above (p = 1):
//   f = 4(1+x), g = 1/(1+x), h = 3/(1+x),
//   P = -4x(1+x)/(1+eps y), Q = -2(1+x), alpha = (a-1)/eps.
// The derivation from the original system is documented in the repository
// docs.  N_x defaults to 2*N_eps + 16: each eps order costs p+1 trusted
// x-orders (one derivative, one x^p shift), the rest is slack.
NormalFormProblem brusselator_problem(unsigned N_eps, unsigned N_x = 0);

}  // namespace canard
