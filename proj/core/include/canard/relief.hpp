#pragma once

#include <complex>
#include <vector>

#include "canard/errors.hpp"

namespace canard {

using Cplx = std::complex<double>;

// Piecewise-linear path in the complex plane.
struct ComplexPath {
    std::vector<Cplx> points;  // consecutive vertices, at least 2

    double total_length() const;
    std::size_t segment_count() const { return points.empty() ? 0 : points.size() - 1; }
};

// Relief R(x) = Re(e^{-i theta} F(x)) with F' polynomial and F(base) = 0.
// The antiderivative is taken in closed form, so R carries no quadrature
// error.
struct ReliefSpec {
    std::vector<Cplx> dF;  // coefficients of F', lowest degree first
    Cplx base = 0.0;
    double theta = 0.0;

    Cplx F(Cplx x) const;        // antiderivative, zero at base
    Cplx dF_at(Cplx x) const;    // F'(x)
    double R(Cplx x) const;      // the relief

    static ReliefSpec vdp();          // F' = (t-1)(t+1)^2, base 1
    static ReliefSpec brusselator();  // F' = 2t(1+t), base 0
};

double relief_value(const ReliefSpec& spec, Cplx x);

// Sampled certificate for Definition-1 style descent:
//   C = inf over samples of (-dR/ds) / |F'(gamma) gamma'|.
struct DescentCertificate {
    double C = 0.0;
    Cplx worst_point;
    bool descending = false;
    bool col_on_path = false;  // |F'| fell under tolerance at a sample
};

DescentCertificate descent_check(const ReliefSpec& spec, const ComplexPath& path,
                                 unsigned samples_per_segment = 64);

struct DescentStop {
    Cplx target = 0.0;        // col to approach
    double radius = 1e-3;     // stop when within this distance of target
    double max_arclength = 50.0;
};

// Unit-speed steepest descent dx/ds = -e^{i theta} conj(F'(x))/|F'(x)|,
// emitted as a polyline with R strictly decreasing along it.
ComplexPath steepest_descent_path(const ReliefSpec& spec, Cplx start, const DescentStop& stop,
                                  double step = 1e-3);

struct BBox {
    double xmin, xmax, ymin, ymax;
};

// Marching-squares level curves of R on a res x res grid.
std::vector<std::vector<Cplx>> level_curves(const ReliefSpec& spec, const std::vector<double>& levels,
                                            const BBox& bbox, unsigned grid_resolution);

}  // namespace canard
