#pragma once

#include <string>

#include "canard/fields.hpp"
#include "canard/integrator.hpp"

namespace canard {

// Front-door integration: runs in hardware double when
// cfg.precision_digits <= 16, otherwise in a 50-digit big-float stepper and
// rounds the result back to double.  Dense output is only recorded in the
// double path.
Trajectory<Cplx> integrate_along_path(const ODEField& field, const ComplexPath& path, Cplx y0,
                                      const IntegratorConfig& cfg);

// Runs the linear_test problem at a list of tolerances and reports
// (tolerance, observed error) against the closed-form solution.
std::vector<std::pair<double, double>> order_convergence_probe(double eps,
                                                               const std::vector<double>& tols);

FieldKind field_kind_from_string(const std::string& name);
std::string field_kind_name(FieldKind kind);

}  // namespace canard
