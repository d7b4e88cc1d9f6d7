#pragma once

#include <complex>
#include <vector>

#include "canard/errors.hpp"

namespace canard {

enum class FieldKind {
    linear_test,        // eps y' = -y
    vdp_outer,          // (E): eps v dv/du = (1-u^2) v + alpha - u
    vdp_inner,          // (2.2): Y0 Y0' = 2X Y0 + 2
    vdp_inner_eps,      // (E'): Y Y' = 2XY(1 - (eps'/2) X) + alpha + 1 - eps' X
    brusselator_outer,  // (4.1), see below
    brusselator_inner,  // (4.2): Y0' = -2Y0/X + 1/X^4 - 2/X^2 + 1/(X^5 Y0)
    user_polynomial,    // dy/dx = sum c_{ij} x^i y^j
};

struct ODEField {
    FieldKind kind = FieldKind::linear_test;
    std::complex<double> eps{0.1, 0.0};
    std::complex<double> param{1.0, 0.0};  // alpha (VdP) or a (Brusselator)
    // Guard for kinds that divide by the state: |y| below this throws
    // PoleEncountered rather than integrating garbage.
    double pole_guard = 1e-8;
    // user_polynomial terms (i, j, coeff) meaning coeff * x^i * y^j.
    std::vector<std::tuple<unsigned, unsigned, std::complex<double>>> poly_terms;
};

// Right-hand side functor usable at any complex precision C.
template <typename C>
class FieldRHS {
  public:
    explicit FieldRHS(const ODEField& f)
        : kind_(f.kind),
          eps_(C(f.eps.real()) + C(0, 1) * C(f.eps.imag())),
          param_(C(f.param.real()) + C(0, 1) * C(f.param.imag())),
          guard_(f.pole_guard) {
        for (auto& [i, j, c] : f.poly_terms)
            terms_.emplace_back(i, j, C(c.real()) + C(0, 1) * C(c.imag()));
    }

    C operator()(const C& x, const C& y) const {
        using std::abs;
        switch (kind_) {
            case FieldKind::linear_test:
                return -y / eps_;
            case FieldKind::vdp_outer: {
                check_state(y);
                return ((C(1) - x * x) * y + param_ - x) / (eps_ * y);
            }
            case FieldKind::vdp_inner: {
                check_state(y);
                return (C(2) * x * y + C(2)) / y;
            }
            case FieldKind::vdp_inner_eps: {
                check_state(y);
                const C ep = pow(eps_, C(1) / C(3));
                return (C(2) * x * y * (C(1) - ep / C(2) * x) + param_ + C(1) - ep * x) / y;
            }
            case FieldKind::brusselator_outer: {
                check_state(y);
                const C opx = C(1) + x;
                const C phi0 = C(1) / (C(2) * opx * opx * opx);
                const C num = C(2) * x / (opx * opx) * (y - phi0) -
                              (param_ - C(1)) / (opx * opx) * y -
                              y * (y - phi0) * C(2) * eps_ / opx;
                return num / (eps_ * y);
            }
            case FieldKind::brusselator_inner: {
                check_state(y);
                const C x2 = x * x;
                const C x4 = x2 * x2;
                return -C(2) * y / x + C(1) / x4 - C(2) / x2 + C(1) / (x4 * x * y);
            }
            case FieldKind::user_polynomial: {
                C acc(0);
                for (auto& [i, j, c] : terms_) {
                    C t = c;
                    for (unsigned a = 0; a < i; ++a) t *= x;
                    for (unsigned b = 0; b < j; ++b) t *= y;
                    acc += t;
                }
                return acc;
            }
        }
        throw Error("FieldRHS: unknown kind");
    }

  private:
    void check_state(const C& y) const {
        using std::abs;
        if (static_cast<double>(abs(y)) < guard_)
            throw PoleEncountered("field divides by the state and |y| fell below the guard");
    }

    FieldKind kind_;
    C eps_, param_;
    double guard_;
    std::vector<std::tuple<unsigned, unsigned, C>> terms_;
};

}  // namespace canard
