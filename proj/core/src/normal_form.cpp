#include "canard/normal_form.hpp"

#include "canard/errors.hpp"

namespace canard {

namespace {

// Memoized eps-coefficients of powers of the partial solution y.  pow_[k][l]
// holds [eps^l] y^k once computed; entries only ever use y_0..y_l, so they
// stay valid as higher orders of y are appended.
class PowerTable {
  public:
    PowerTable(const std::vector<Series>& y, unsigned Nx) : y_(y), Nx_(Nx) {}

    const Series& get(unsigned k, unsigned l) {
        if (pow_.size() <= k) pow_.resize(k + 1);
        auto& row = pow_[k];
        if (row.size() > l && row[l].order() == Nx_) return row[l];
        if (row.size() <= l) row.resize(l + 1, Series(0));
        Series r(Nx_);
        if (k == 0) {
            if (l == 0) r[0] = 1;
        } else if (k == 1) {
            r = y_.at(l);
        } else {
            for (unsigned i = 0; i <= l; ++i) r = r + y_.at(i) * get(k - 1, l - i);
        }
        row[l] = r;
        return row[l];
    }

  private:
    const std::vector<Series>& y_;
    unsigned Nx_;
    std::vector<std::vector<Series>> pow_;
};

const Series* eps_coeff(const EpsSeries& s, unsigned m) {
    return m < s.size() ? &s[m] : nullptr;
}

}  // namespace

CanardFormalSolution canard_formal(const NormalFormProblem& pb) {
    const unsigned Nx = pb.N_x;
    if (pb.f.coeffs().empty() || pb.f[0] == 0)
        throw DegenerateF("canard_formal: f(0) = 0");
    if (pb.Q.empty() || pb.Q[0].empty() || pb.Q[0][0][0] == 0)
        throw DegenerateQ("canard_formal: Q(0,0,0) = 0");
    for (unsigned k = 1; k < pb.Q.size(); ++k) {
        if (!pb.Q[k].empty() && !pb.Q[k][0].is_zero())
            throw Error("canard_formal: y-coefficient Q[" + std::to_string(k) +
                        "] must have eps valuation >= 1");
    }

    const Series& Q00 = pb.Q[0][0];  // Q(x, 0, 0)

    CanardFormalSolution sol;
    PowerTable ypow(sol.y, Nx);

    for (unsigned n = 0; n <= pb.N_eps; ++n) {
        Series known(Nx);
        if (n >= 1) {
            known = known + sol.y[n - 1].derivative();
            // eps g(x,eps) y contributes sum_m g_m y_{n-1-m}
            for (unsigned m = 0; m <= n - 1; ++m) {
                if (const Series* gm = eps_coeff(pb.g, m)) known = known - *gm * sol.y[n - 1 - m];
            }
            // eps y^2 P(x,eps,eps y): coefficient of eps^n is
            // sum_{k,m} P[k]_m [eps^{n-1-k-m}] y^{k+2}
            for (unsigned k = 0; k < pb.P.size() && k <= n - 1; ++k) {
                for (unsigned m = 0; m + k <= n - 1; ++m) {
                    if (const Series* pkm = eps_coeff(pb.P[k], m))
                        if (!pkm->is_zero())
                            known = known - *pkm * ypow.get(k + 2, n - 1 - k - m);
                }
            }
        }
        if (const Series* hn = eps_coeff(pb.h, n)) known = known - *hn;
        // alpha Q contributions from the already known a_0..a_{n-1}
        for (unsigned m = 0; m < n; ++m) {
            const unsigned l = n - m;
            Series ql(Nx);
            if (const Series* q0l = eps_coeff(pb.Q[0], l)) ql = ql + *q0l;
            for (unsigned k = 1; k < pb.Q.size(); ++k) {
                for (unsigned j = 1; j <= l; ++j) {
                    if (const Series* qkj = eps_coeff(pb.Q[k], j))
                        if (!qkj->is_zero()) ql = ql + *qkj * ypow.get(k, l - j);
                }
            }
            Series am_series(Nx);
            for (int d = 0; d <= sol.a[m].degree(); ++d) am_series[d] = sol.a[m][d];
            known = known - am_series * ql;
        }

        // Split known = x^p f y_n + a_n Q00.
        Series ratio = series_div(known, Q00);
        std::vector<Rat> a_coeffs(pb.p);
        for (unsigned d = 0; d < pb.p; ++d) a_coeffs[d] = ratio[d];
        Poly an{a_coeffs};
        Series an_series(Nx);
        for (unsigned d = 0; d < pb.p; ++d) an_series[d] = a_coeffs[d];

        Series num = known - an_series * Q00;
        for (unsigned d = 0; d < pb.p; ++d) {
            if (num[d] != 0)
                throw Error("canard_formal: valuation defect at order " + std::to_string(n));
        }
        sol.a.push_back(std::move(an));
        sol.y.push_back(series_div(num.shift_down(pb.p), pb.f));
    }
    return sol;
}

NormalFormProblem brusselator_problem(unsigned N_eps, unsigned N_x) {
    if (N_x == 0) N_x = 2 * N_eps + 16;
    NormalFormProblem pb;
    pb.p = 1;
    pb.N_eps = N_eps;
    pb.N_x = N_x;

    Series one_px(N_x);
    one_px[0] = 1;
    one_px[1] = 1;
    Series inv_1px = Series::geometric_inverse(one_px);

    pb.f = one_px * Rat(4);
    pb.g = {inv_1px};
    pb.h = {inv_1px * Rat(3)};
    pb.Q = {{one_px * Rat(-2)}};

    // P = -4x(1+x) * 1/(1+w), w = eps*y: alternating powers of w.  Powers
    // beyond N_eps-1 cannot contribute at order <= N_eps.
    Series m4x(N_x);
    m4x[1] = -4;
    m4x[2] = -4;
    pb.P.resize(N_eps);
    for (unsigned k = 0; k < N_eps; ++k) pb.P[k] = {k % 2 == 0 ? m4x : m4x * Rat(-1)};
    return pb;
}

}  // namespace canard
