#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "canard/ode.hpp"
#include "canard/shooter.hpp"

using namespace canard;

TEST_CASE("vdp canard value at eps = 0.2") {
    const auto r = find_vdp_alpha(0.2);
    // Frozen against an independent adaptive RK45 implementation (rtol 1e-12).
    CHECK(r.parameter.real() == doctest::Approx(0.96842847077).epsilon(1e-9));
    CHECK(r.parameter.imag() == doctest::Approx(0.00153095524).epsilon(1e-6));
    CHECK(std::abs(r.residual) < 1e-12);
    CHECK(vdp_stokes_observable(0.2, r) == doctest::Approx(1.0760).epsilon(1e-3));
}

TEST_CASE("vdp canard value at eps = 0.17") {
    const auto r = find_vdp_alpha(0.17);
    CHECK(r.parameter.real() == doctest::Approx(0.974311717).epsilon(1e-8));
    CHECK(r.parameter.imag() == doctest::Approx(0.000547758803).epsilon(1e-6));
}

TEST_CASE("imaginary part decays super-exponentially") {
    double prev = find_vdp_alpha(0.2).parameter.imag();
    for (double eps : {0.17, 0.14, 0.1}) {
        const double im = find_vdp_alpha(eps).parameter.imag();
        CHECK(im > 0);
        CHECK(im < 0.5 * prev);  // far faster than any power of eps
        prev = im;
    }
}

TEST_CASE("path independence of the canard value") {
    const double eps = 0.14;
    const auto base = find_vdp_alpha(eps);
    ShootPaths alt = vdp_shoot_paths();
    // A different certified-descending east route: drop through the lower
    // half plane before rejoining u = 1.
    alt.path_b.points = {Cplx(9, 0), Cplx(5, -1.0), Cplx(2.2, -0.4), Cplx(1, 0)};
    const auto moved = find_vdp_alpha(eps, ShootConfig{}, alt);
    CHECK(std::abs(moved.parameter - base.parameter) < 1e-10);
}

TEST_CASE("initial value insensitivity") {
    const double eps = 0.14;
    const auto base = find_vdp_alpha(eps);
    ShootPaths alt = vdp_shoot_paths();
    alt.y_b0 *= 1.1;  // 10% off the slow curve at u = 9
    const auto moved = find_vdp_alpha(eps, ShootConfig{}, alt);
    // The east relief drop is ~R(9) >> 1, so the memory of the initial value
    // is exponentially erased.
    CHECK(std::abs(moved.parameter - base.parameter) < 1e-2 * std::abs(base.parameter.imag()));
}

TEST_CASE("conjugation symmetry of the underlying flow") {
    // Integrating (E) with conjugated path, parameter and seed produces the
    // conjugate trajectory; this is the mechanism behind alpha^- = conj(alpha^+).
    ODEField f;
    f.kind = FieldKind::vdp_outer;
    f.eps = 0.14;
    f.param = Cplx(0.98, 0.00012);
    IntegratorConfig cfg;
    cfg.rel_tol = 1e-12;
    const ComplexPath path{{Cplx(-1, 10), Cplx(0, 0), Cplx(1, 0)}};
    const auto fwd = integrate_along_path(f, path, Cplx(0, 0.1), cfg);

    ODEField fc = f;
    fc.param = std::conj(f.param);
    ComplexPath cpath = path;
    for (auto& p : cpath.points) p = std::conj(p);
    const auto bwd = integrate_along_path(fc, cpath, Cplx(0, -0.1), cfg);
    CHECK(std::abs(bwd.end_value - std::conj(fwd.end_value)) < 1e-10 * std::abs(fwd.end_value));
}

TEST_CASE("shooting paths are certified descending") {
    const auto vdp = vdp_shoot_paths();
    const auto rv = ReliefSpec::vdp();
    CHECK(descent_check(rv, vdp.path_a).descending);
    CHECK(descent_check(rv, vdp.path_b).descending);

    const auto bn = brusselator_shoot_paths();
    const auto rb = ReliefSpec::brusselator();
    CHECK(descent_check(rb, bn.path_a).descending);
    CHECK(descent_check(rb, bn.path_b).descending);
    // The summit of |x| = 1.8 restricted to the second quadrant, mirrored
    // into the lower half plane; its relief value is frozen.
    CHECK(bn.path_a.points.front().real() < 0);
    CHECK(bn.path_a.points.front().imag() < 0);
    CHECK(rb.R(bn.path_a.points.front()) == doctest::Approx(2.8099).epsilon(1e-3));
}

TEST_CASE("brusselator canard values") {
    // Frozen against the independent RK45 oracle (upper-half north path gives
    // the conjugate, hence the sign of the imaginary part).
    const auto r1 = find_brusselator_a(0.1);
    CHECK(r1.parameter.real() == doctest::Approx(1.1798290).epsilon(1e-6));
    CHECK(r1.parameter.imag() == doctest::Approx(0.0220251).epsilon(1e-4));

    const auto r2 = find_brusselator_a(0.08);
    CHECK(r2.parameter.real() == doctest::Approx(1.1414480).epsilon(1e-5));
    CHECK(r2.parameter.imag() == doctest::Approx(0.0093623).epsilon(1e-3));
    CHECK(brusselator_stokes_observable(0.08, r2) > 0);
}
