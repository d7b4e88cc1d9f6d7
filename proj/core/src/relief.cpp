#include "canard/relief.hpp"

#include <cmath>
#include <limits>
#include <map>

namespace canard {

double ComplexPath::total_length() const {
    double L = 0;
    for (std::size_t i = 1; i < points.size(); ++i) L += std::abs(points[i] - points[i - 1]);
    return L;
}

Cplx ReliefSpec::dF_at(Cplx x) const {
    Cplx v = 0;
    for (auto it = dF.rbegin(); it != dF.rend(); ++it) v = v * x + *it;
    return v;
}

Cplx ReliefSpec::F(Cplx x) const {
    // Antiderivative with F(base) = 0: evaluate sum c_k (x^{k+1}-base^{k+1})/(k+1).
    Cplx v = 0, vb = 0;
    for (std::size_t k = dF.size(); k-- > 0;) {
        v = v * x + dF[k] / static_cast<double>(k + 1);
        vb = vb * base + dF[k] / static_cast<double>(k + 1);
    }
    return v * x - vb * base;
}

double ReliefSpec::R(Cplx x) const {
    return (std::exp(Cplx(0, -theta)) * F(x)).real();
}

ReliefSpec ReliefSpec::vdp() {
    // (t-1)(t+1)^2 = t^3 + t^2 - t - 1
    return ReliefSpec{{-1.0, -1.0, 1.0, 1.0}, 1.0, 0.0};
}

ReliefSpec ReliefSpec::brusselator() {
    // 2t(1+t) = 2t + 2t^2
    return ReliefSpec{{0.0, 2.0, 2.0}, 0.0, 0.0};
}

double relief_value(const ReliefSpec& spec, Cplx x) { return spec.R(x); }

DescentCertificate descent_check(const ReliefSpec& spec, const ComplexPath& path,
                                 unsigned samples_per_segment) {
    if (path.segment_count() == 0 || path.total_length() == 0)
        throw DegeneratePath("descent_check: empty or zero-length path");
    constexpr double col_tol = 1e-12;

    DescentCertificate cert;
    cert.C = std::numeric_limits<double>::infinity();
    const Cplx rot = std::exp(Cplx(0, -spec.theta));
    for (std::size_t s = 0; s + 1 < path.points.size(); ++s) {
        const Cplx a = path.points[s], b = path.points[s + 1];
        const Cplx dir = b - a;
        if (std::abs(dir) == 0) continue;
        for (unsigned i = 0; i <= samples_per_segment; ++i) {
            const double t = static_cast<double>(i) / samples_per_segment;
            const Cplx x = a + t * dir;
            const Cplx fp = spec.dF_at(x);
            const double denom = std::abs(fp * dir);
            if (denom < col_tol * std::abs(dir)) {
                cert.col_on_path = true;
                continue;
            }
            // dR/dt along the segment, exact directional derivative.
            const double dR = (rot * fp * dir).real();
            const double ratio = -dR / denom;
            if (ratio < cert.C) {
                cert.C = ratio;
                cert.worst_point = x;
            }
        }
    }
    if (!std::isfinite(cert.C)) cert.C = 0.0;
    cert.descending = cert.C > 0.0;
    return cert;
}

ComplexPath steepest_descent_path(const ReliefSpec& spec, Cplx start, const DescentStop& stop,
                                  double step) {
    constexpr double stall_tol = 1e-12;
    const Cplx rot = std::exp(Cplx(0, spec.theta));
    Cplx x = start;
    if (std::abs(spec.dF_at(x)) < stall_tol)
        throw StagnationAtCol("steepest_descent_path: started at a col");

    ComplexPath out;
    out.points.push_back(x);
    double arclen = 0.0;
    while (std::abs(x - stop.target) > stop.radius && arclen < stop.max_arclength) {
        // Midpoint rule on the unit-speed descent field.
        auto dir = [&](Cplx z) -> Cplx {
            Cplx fp = spec.dF_at(z);
            double m = std::abs(fp);
            if (m < stall_tol) throw StagnationAtCol("steepest_descent_path: |F'| underflow");
            return -rot * std::conj(fp) / m;
        };
        Cplx mid = x + 0.5 * step * dir(x);
        x += step * dir(mid);
        arclen += step;
        out.points.push_back(x);
    }
    return out;
}

namespace {

// Marching squares: assemble per-cell crossing segments, then chain shared
// endpoints into polylines.
struct Key {
    long long a, b;
    bool operator<(const Key& o) const { return a != o.a ? a < o.a : b < o.b; }
};

Key quantize(Cplx z, double h) {
    return Key{static_cast<long long>(std::llround(z.real() / h * 4096.0)),
               static_cast<long long>(std::llround(z.imag() / h * 4096.0))};
}

}  // namespace

std::vector<std::vector<Cplx>> level_curves(const ReliefSpec& spec, const std::vector<double>& levels,
                                            const BBox& bbox, unsigned res) {
    std::vector<std::vector<Cplx>> out;
    if (levels.empty() || res < 2) return out;
    const double hx = (bbox.xmax - bbox.xmin) / (res - 1);
    const double hy = (bbox.ymax - bbox.ymin) / (res - 1);

    std::vector<double> grid(static_cast<std::size_t>(res) * res);
    for (unsigned j = 0; j < res; ++j)
        for (unsigned i = 0; i < res; ++i)
            grid[j * res + i] = spec.R(Cplx(bbox.xmin + i * hx, bbox.ymin + j * hy));

    for (double level : levels) {
        std::vector<std::pair<Cplx, Cplx>> segs;
        auto interp = [&](double va, double vb, Cplx pa, Cplx pb) {
            double t = (level - va) / (vb - va);
            return pa + t * (pb - pa);
        };
        for (unsigned j = 0; j + 1 < res; ++j) {
            for (unsigned i = 0; i + 1 < res; ++i) {
                const double v00 = grid[j * res + i], v10 = grid[j * res + i + 1];
                const double v01 = grid[(j + 1) * res + i], v11 = grid[(j + 1) * res + i + 1];
                const Cplx p00(bbox.xmin + i * hx, bbox.ymin + j * hy);
                const Cplx p10(bbox.xmin + (i + 1) * hx, bbox.ymin + j * hy);
                const Cplx p01(bbox.xmin + i * hx, bbox.ymin + (j + 1) * hy);
                const Cplx p11(bbox.xmin + (i + 1) * hx, bbox.ymin + (j + 1) * hy);
                std::vector<Cplx> pts;
                auto edge = [&](double va, double vb, Cplx pa, Cplx pb) {
                    if ((va < level) != (vb < level)) pts.push_back(interp(va, vb, pa, pb));
                };
                edge(v00, v10, p00, p10);
                edge(v10, v11, p10, p11);
                edge(v11, v01, p11, p01);
                edge(v01, v00, p01, p00);
                if (pts.size() == 2) segs.emplace_back(pts[0], pts[1]);
                else if (pts.size() == 4) {
                    // Saddle cell: pair edges arbitrarily but consistently.
                    segs.emplace_back(pts[0], pts[1]);
                    segs.emplace_back(pts[2], pts[3]);
                }
            }
        }
        // Chain segments into polylines via shared endpoints.
        const double h = std::min(hx, hy);
        std::multimap<Key, std::size_t> by_end;
        for (std::size_t s = 0; s < segs.size(); ++s) {
            by_end.emplace(quantize(segs[s].first, h), s);
            by_end.emplace(quantize(segs[s].second, h), s);
        }
        std::vector<bool> used(segs.size(), false);
        for (std::size_t s = 0; s < segs.size(); ++s) {
            if (used[s]) continue;
            used[s] = true;
            std::vector<Cplx> line{segs[s].first, segs[s].second};
            bool extended = true;
            while (extended) {
                extended = false;
                Key k = quantize(line.back(), h);
                auto [lo, hi] = by_end.equal_range(k);
                for (auto it = lo; it != hi; ++it) {
                    std::size_t t = it->second;
                    if (used[t]) continue;
                    Key kf = quantize(segs[t].first, h), ks = quantize(segs[t].second, h);
                    if (!(kf < k) && !(k < kf)) line.push_back(segs[t].second);
                    else if (!(ks < k) && !(k < ks)) line.push_back(segs[t].first);
                    else continue;
                    used[t] = true;
                    extended = true;
                    break;
                }
            }
            out.push_back(std::move(line));
        }
    }
    return out;
}

}  // namespace canard
