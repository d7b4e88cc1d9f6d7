#pragma once

#include <string>
#include <utility>
#include <vector>

#include "canard/bigfloat.hpp"
#include "canard/rational.hpp"

namespace canard {

enum class FitModel { inv_sqrt_n, inv_cbrt_n };

struct FitResult {
    double C = 0;
    double a = 0;
    FitModel model = FitModel::inv_sqrt_n;
    unsigned n_min = 0, n_max = 0;
    double residual_norm = 0;
};

// Ordinary least squares of value = C + a * n^{-1/2} (or n^{-1/3}) over the
// points with n_min <= n <= n_max.
FitResult fit_bn(const std::vector<std::pair<unsigned, double>>& data, FitModel model,
                 unsigned n_min, unsigned n_max);

// r_n = |a_{n+1}| / ((n+1) |a_n|), the Gevrey-type diagnostic.
std::vector<double> gevrey_ratio(const std::vector<Rat>& a);

struct SmallestTermSum {
    BigFloat value;
    unsigned n_opt = 0;
};

// Sum of a_n eps^n up to (and including) the index with smallest |a_n eps^n|.
// Throws NoInteriorMinimum when the minimum sits at the end of the available
// range (eps too large, or too few terms).
SmallestTermSum sum_smallest_term(const std::vector<Rat>& a, double eps, unsigned digits = 30);

struct ConstantProbe {
    std::vector<std::pair<unsigned, double>> c;  // (n, a_n/(n^2 (3/2)^n n!))
    double extrapolated = 0;                     // two-level Richardson in 1/n
    std::vector<std::pair<std::string, double>> candidates;
    std::string nearest;
};

// Trend of a_n/(n^2 (3/2)^n n!) for the Brusselator canard-value series,
// compared against the constants in circulation; reports, does not decide.
ConstantProbe brusselator_constant_probe(const std::vector<Rat>& a);

}  // namespace canard
