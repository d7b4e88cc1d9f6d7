#include "canard/ode.hpp"

#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>

namespace canard {

namespace {
using BigCplx = boost::multiprecision::cpp_complex_50;
}

Trajectory<Cplx> integrate_along_path(const ODEField& field, const ComplexPath& path, Cplx y0,
                                      const IntegratorConfig& cfg) {
    if (cfg.precision_digits <= 16) {
        FieldRHS<Cplx> rhs(field);
        return integrate_path<Cplx>(rhs, path.points, y0, cfg);
    }
    FieldRHS<BigCplx> rhs(field);
    std::vector<BigCplx> pts;
    pts.reserve(path.points.size());
    for (auto& p : path.points) pts.emplace_back(p.real(), p.imag());
    auto big = integrate_path<BigCplx>(rhs, pts, BigCplx(y0.real(), y0.imag()), cfg);
    Trajectory<Cplx> out;
    out.end_value = Cplx(static_cast<double>(big.end_value.real()),
                         static_cast<double>(big.end_value.imag()));
    out.step_count = big.step_count;
    out.rejected_steps = big.rejected_steps;
    return out;
}

std::vector<std::pair<double, double>> order_convergence_probe(double eps,
                                                               const std::vector<double>& tols) {
    std::vector<std::pair<double, double>> out;
    ODEField f;
    f.kind = FieldKind::linear_test;
    f.eps = eps;
    ComplexPath path{{Cplx(0, 0), Cplx(1, 0)}};
    const double exact = std::exp(-1.0 / eps);
    for (double tol : tols) {
        IntegratorConfig cfg;
        cfg.rel_tol = tol;
        cfg.abs_tol = tol * 1e-2;
        auto traj = integrate_along_path(f, path, Cplx(1, 0), cfg);
        out.emplace_back(tol, std::abs(traj.end_value - exact));
    }
    return out;
}

FieldKind field_kind_from_string(const std::string& name) {
    if (name == "linear-test" || name == "linear_test") return FieldKind::linear_test;
    if (name == "vdp-outer" || name == "vdp_outer") return FieldKind::vdp_outer;
    if (name == "vdp-inner" || name == "vdp_inner") return FieldKind::vdp_inner;
    if (name == "vdp-inner-eps" || name == "vdp_inner_eps") return FieldKind::vdp_inner_eps;
    if (name == "brusselator-outer" || name == "brusselator_outer")
        return FieldKind::brusselator_outer;
    if (name == "brusselator-inner" || name == "brusselator_inner")
        return FieldKind::brusselator_inner;
    if (name == "user-polynomial" || name == "user_polynomial") return FieldKind::user_polynomial;
    throw Error("unknown field kind: " + name);
}

std::string field_kind_name(FieldKind kind) {
    switch (kind) {
        case FieldKind::linear_test: return "linear-test";
        case FieldKind::vdp_outer: return "vdp-outer";
        case FieldKind::vdp_inner: return "vdp-inner";
        case FieldKind::vdp_inner_eps: return "vdp-inner-eps";
        case FieldKind::brusselator_outer: return "brusselator-outer";
        case FieldKind::brusselator_inner: return "brusselator-inner";
        case FieldKind::user_polynomial: return "user-polynomial";
    }
    return "unknown";
}

}  // namespace canard
