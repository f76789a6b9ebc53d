#include "cantornet/line_map.hpp"

#include <cmath>

#include "cantornet/errors.hpp"

namespace cantornet {

// Both branches are evaluated as t/2 plus a precomputed offset: t * 0.5 is
// exact, delta - 1 is exact (Sterbenz), so each evaluation rounds exactly
// once and the map is the correctly rounded version of the real-valued one.
// In particular g_tilde(theta) == 0 and g(1) == delta - 1/2 hold exactly.

double g_tilde(double t, const DeltaParams& dp) {
    if (!(t >= 0.0)) throw domain_error("g_tilde: argument must be nonnegative");
    if (t < dp.theta) return t * 0.5 + dp.delta;
    if (t < 1.0) return t * 0.5 + (dp.delta - 1.0);
    return dp.delta - 0.5;
}

double g(double t, const DeltaParams& dp) {
    if (!(t >= 0.0) || !(t <= 1.0)) throw domain_error("g: argument must lie in [0, 1]");
    if (t < dp.theta) return t * 0.5 + dp.delta;
    return t * 0.5 + (dp.delta - 1.0);
}

std::vector<double> embed(double t, const NetworkParams& p) {
    if (!(t >= 0.0)) throw domain_error("embed: coordinate must be nonnegative");
    std::vector<double> x(p.n());
    for (std::size_t i = 0; i < p.n(); ++i) x[i] = t * p.v[i];
    return x;
}

ProjectResult project(const std::vector<double>& x, const NetworkParams& p, double tol) {
    const std::size_t n = p.n();
    if (x.size() != n) throw domain_error("project: state size mismatch");
    const double vx = weighted_sum(p.v.data(), x.data(), n);
    const double vv = weighted_sum(p.v.data(), p.v.data(), n);
    ProjectResult r;
    r.t = vx / vv;
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        res = std::fmax(res, std::fabs(x[i] - r.t * p.v[i]));
    r.off_ray_residual = res;
    if (res > tol)
        throw not_on_line_error("project: state is not on the invariant ray", res);
    return r;
}

double diagram_residual(double t, const NetworkParams& p) {
    if (!(t >= 0.0)) throw domain_error("diagram_residual: argument must be nonnegative");
    const std::size_t n = p.n();
    const std::vector<double> x = embed(t, p);
    const double gt = g_tilde(t, p.dp);
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = weighted_sum(&p.W.a[i * n], x.data(), n);
        const double yi = activation(p, i, s);
        res = std::fmax(res, std::fabs(yi - gt * p.v[i]));
    }
    return res;
}

ScalarOrbit g_orbit(double t0, std::uint64_t N, const DeltaParams& dp) {
    if (!(t0 >= 0.0) || !(t0 <= 1.0)) throw domain_error("g_orbit: t0 must lie in [0, 1]");
    ScalarOrbit o;
    o.t0 = t0;
    o.values.reserve(N + 1);
    o.branches.reserve(N + 1);
    double t = t0;
    for (std::uint64_t k = 0;; ++k) {
        const bool right = !(t < dp.theta);
        o.values.push_back(t);
        o.branches.push_back(right ? 1 : 0);
        if (k == N) break;
        t = right ? t * 0.5 + (dp.delta - 1.0) : t * 0.5 + dp.delta;
    }
    return o;
}

} // namespace cantornet
