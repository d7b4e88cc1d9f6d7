#include "canard/shooter.hpp"

#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>

#include "canard/fields.hpp"

namespace canard {

namespace {

using BigCplx = boost::multiprecision::cpp_complex_50;

template <typename C>
std::vector<C> to_scalar(const std::vector<Cplx>& pts) {
    std::vector<C> out;
    out.reserve(pts.size());
    for (auto& p : pts) out.emplace_back(p.real(), p.imag());
    return out;
}

template <typename C>
Cplx to_double(const C& z) {
    return Cplx(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

// Complex secant iteration on a mismatch functional.
template <typename C, typename M>
ShootResult secant(M&& mismatch, C p0, C p1, double tol, unsigned max_iter, unsigned digits) {
    using std::abs;
    C f0 = mismatch(p0);
    C f1 = mismatch(p1);
    ShootResult res;
    res.precision_digits = digits;
    for (unsigned it = 0; it < max_iter; ++it) {
        const C df = f1 - f0;
        if (static_cast<double>(abs(df)) == 0.0)
            throw NoConvergence("secant: stalled (flat mismatch)");
        const C p2 = p1 - f1 * (p1 - p0) / df;
        p0 = p1;
        f0 = f1;
        p1 = p2;
        f1 = mismatch(p1);
        res.iterations = it + 1;
        if (static_cast<double>(abs(f1)) < tol) {
            res.parameter = to_double(p1);
            res.residual = to_double(f1);
            return res;
        }
    }
    throw NoConvergence("secant: iteration cap reached");
}

struct Schedule {
    unsigned digits;
    double tol;      // mismatch tolerance
    double rel_tol;  // ODE relative tolerance
};

Schedule schedule_for(double eps, const ShootConfig& cfg) {
    Schedule s;
    s.digits = cfg.precision_digits ? cfg.precision_digits : (eps >= 0.08 ? 16u : 40u);
    const bool big = s.digits > 16;
    // Step-size control noise leaves a mismatch floor around 5e-15 even at
    // ODE tolerance 1e-18, and the parameter is ~15x more accurate than the
    // final residual, so 1e-13 already resolves imaginary parts of 1e-12 to
    // a tenth of a percent.  Tighter settings just spin the secant forever.
    s.tol = cfg.match_tol > 0 ? cfg.match_tol : (big ? 1e-13 : 1e-13);
    s.rel_tol = cfg.ode_rel_tol > 0 ? cfg.ode_rel_tol : (big ? 1e-18 : 1e-12);
    return s;
}

// Right-hand sides with the shooting parameter kept at working precision
// (ODEField itself stores doubles).
template <typename C>
C rhs_with_param(const ODEField& f, const C& param, const C& x, const C& y) {
    using std::abs;
    if (static_cast<double>(abs(y)) < f.pole_guard)
        throw PoleEncountered("shoot: |y| fell below the pole guard");
    const C eps(f.eps.real(), f.eps.imag());
    if (f.kind == FieldKind::vdp_outer) {
        return ((C(1) - x * x) * y + param - x) / (eps * y);
    }
    const C opx = C(1) + x;
    const C phi0 = C(1) / (C(2) * opx * opx * opx);
    const C num = C(2) * x / (opx * opx) * (y - phi0) - (param - C(1)) / (opx * opx) * y -
                  y * (y - phi0) * C(2) * eps / opx;
    return num / (eps * y);
}

template <typename C>
ShootResult run_shoot(const ODEField& proto, const ShootPaths& paths, Cplx guess,
                      const Schedule& sched, unsigned max_iter) {
    IntegratorConfig icfg;
    icfg.rel_tol = sched.rel_tol;
    icfg.abs_tol = sched.rel_tol * 1e-2;
    icfg.precision_digits = sched.digits;

    const auto pa = to_scalar<C>(paths.path_a.points);
    const auto pb = to_scalar<C>(paths.path_b.points);
    const C ya0(paths.y_a0.real(), paths.y_a0.imag());
    const C yb0(paths.y_b0.real(), paths.y_b0.imag());

    auto mismatch = [&](const C& param) -> C {
        auto rhs = [&](const C& x, const C& y) -> C { return rhs_with_param(proto, param, x, y); };
        auto ta = integrate_path<C>(rhs, pa, ya0, icfg);
        auto tb = integrate_path<C>(rhs, pb, yb0, icfg);
        return ta.end_value - tb.end_value;
    };

    const C p0(guess.real(), guess.imag());
    const C p1 = p0 + C(1e-6);
    return secant<C>(mismatch, p0, p1, sched.tol, max_iter, sched.digits);
}

}  // namespace

ShootPaths vdp_shoot_paths() {
    ShootPaths p;
    p.path_a.points = {Cplx(-1, 10), Cplx(0, 0), Cplx(1, 0)};
    p.y_a0 = Cplx(0, 0.1);
    p.path_b.points = {Cplx(9, 0), Cplx(1, 0)};
    p.y_b0 = Cplx(-0.1, 0);
    p.match_point = Cplx(1, 0);
    return p;
}

ShootResult find_vdp_alpha(double eps, const ShootConfig& cfg) {
    return find_vdp_alpha(eps, cfg, vdp_shoot_paths());
}

ShootResult find_vdp_alpha(double eps, const ShootConfig& cfg, const ShootPaths& paths) {
    const Schedule sched = schedule_for(eps, cfg);
    ODEField field;
    field.kind = FieldKind::vdp_outer;
    field.eps = eps;
    const Cplx guess(1.0 - eps / 8.0 - 3.0 * eps * eps / 32.0, 0.0);
    if (sched.digits <= 16)
        return run_shoot<std::complex<double>>(field, paths, guess, sched, cfg.max_iterations);
    return run_shoot<BigCplx>(field, paths, guess, sched, cfg.max_iterations);
}

double vdp_stokes_observable(double eps, const ShootResult& r) {
    return 2.0 * r.parameter.imag() * std::exp(4.0 / (3.0 * eps)) * std::sqrt(eps);
}

ShootPaths brusselator_shoot_paths() {
    // Summit: maximize R on the arc |x| = 1.8, arg in [pi/2, pi] (the
    // north-west quadrant; the unrestricted maximum would land on the east
    // mountain instead), then mirror into the lower half plane.
    const ReliefSpec spec = ReliefSpec::brusselator();
    double best_th = M_PI / 2, best_R = -1e300;
    const int n = 4000;
    for (int i = 0; i <= n; ++i) {
        const double th = M_PI / 2 + (M_PI / 2) * i / n;
        const double R = spec.R(1.8 * std::exp(Cplx(0, th)));
        if (R > best_R) {
            best_R = R;
            best_th = th;
        }
    }
    // Golden-section refinement around the sampled maximum.
    double lo = best_th - M_PI / n, hi = best_th + M_PI / n;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int i = 0; i < 60; ++i) {
        const double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
        if (spec.R(1.8 * std::exp(Cplx(0, c))) < spec.R(1.8 * std::exp(Cplx(0, d)))) lo = c;
        else hi = d;
    }
    const Cplx summit = 1.8 * std::exp(Cplx(0, -0.5 * (lo + hi)));  // mirrored

    ShootPaths p;
    p.path_a.points = {summit, 0.6 * std::exp(Cplx(0, -0.78 * M_PI)), Cplx(0, 0)};
    auto phi0 = [](Cplx x) { return 1.0 / (2.0 * std::pow(1.0 + x, 3)); };
    p.y_a0 = phi0(summit);
    p.path_b.points = {Cplx(1.5, 0), Cplx(0, 0)};
    p.y_b0 = phi0(Cplx(1.5, 0));
    p.match_point = Cplx(0, 0);
    return p;
}

ShootResult find_brusselator_a(double eps, const ShootConfig& cfg) {
    const Schedule sched = schedule_for(eps, cfg);
    ODEField field;
    field.kind = FieldKind::brusselator_outer;
    field.eps = eps;
    field.pole_guard = 1e-10;
    const ShootPaths paths = brusselator_shoot_paths();
    const Cplx guess(1.0 + 1.5 * eps + 15.0 / 8.0 * eps * eps, 0.0);
    if (sched.digits <= 16)
        return run_shoot<std::complex<double>>(field, paths, guess, sched, cfg.max_iterations);
    return run_shoot<BigCplx>(field, paths, guess, sched, cfg.max_iterations);
}

double brusselator_stokes_observable(double eps, const ShootResult& r) {
    return 2.0 * r.parameter.imag() * std::exp(2.0 / (3.0 * eps)) * std::pow(eps, 3);
}

}  // namespace canard
