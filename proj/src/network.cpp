#include "cantornet/network.hpp"

#include <cmath>

#include "cantornet/errors.hpp"

namespace cantornet {

NetworkParams make_network(Matrix W, DeltaParams dp, double tol, unsigned max_iter) {
    NetworkParams p;
    p.W = std::move(W);
    p.dp = dp;

    Eigenpair e = power_iteration(p.W, tol, max_iter);
    p.rho = e.rho;
    p.v = std::move(e.v);
    p.pi_residual = e.residual;
    p.pi_iterations = e.iterations;

    const std::size_t n = p.W.n;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) ss += p.v[i] * p.v[i];
    p.v_norm2 = std::sqrt(ss);

    p.hi.resize(n);
    p.lo.resize(n);
    p.add_left.resize(n);
    p.add_mid.resize(n);
    p.add_high.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        p.hi[i] = p.rho * p.v[i];
        p.lo[i] = p.dp.theta * p.hi[i];
        p.add_left[i] = p.dp.delta * p.v[i];
        p.add_mid[i] = (p.dp.delta - 1.0) * p.v[i];   // delta - 1 is exact
        p.add_high[i] = (p.dp.delta - 0.5) * p.v[i];  // delta - 1/2 is exact
    }
    p.inv_two_rho = 1.0 / (2.0 * p.rho);
    return p;
}

double activation_raw(const NetworkParams& p, std::size_t i, double s) {
    if (!(s >= 0.0)) throw domain_error("activation: input must be nonnegative");
    if (s < p.lo[i]) return s * p.inv_two_rho + p.add_left[i];
    if (s < p.hi[i]) return s * p.inv_two_rho + p.add_mid[i];
    return p.add_high[i];
}

double activation(const NetworkParams& p, std::size_t i, double s) {
    double y = activation_raw(p, i, s);
    if (y < 0.0) y = 0.0;
    if (y > p.v[i]) y = p.v[i];
    return y;
}

std::vector<double> step(const NetworkParams& p, const std::vector<double>& x) {
    const std::size_t n = p.n();
    if (x.size() != n) throw domain_error("step: state size mismatch");
    for (double xi : x) {
        if (!std::isfinite(xi) || xi < 0.0 || xi > 1.0 + 1e-9)
            throw domain_error("step: state coordinate outside [0, 1 + 1e-9]");
    }
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = weighted_sum(&p.W.a[i * n], x.data(), n);
        y[i] = activation(p, i, s);
    }
    return y;
}

Orbit simulate(const NetworkParams& p, const std::vector<double>& x0,
               std::uint64_t N, std::uint64_t record_every) {
    if (record_every == 0) throw domain_error("simulate: record_every must be >= 1");
    Orbit o;
    o.steps = N;
    o.record_every = record_every;

    std::vector<double> x = x0;
    auto record = [&](std::uint64_t k) {
        o.ks.push_back(k);
        o.states.insert(o.states.end(), x.begin(), x.end());
    };
    record(0);
    for (std::uint64_t k = 1; k <= N; ++k) {
        x = step(p, x);
        if (k % record_every == 0 || k == N) record(k);
    }
    return o;
}

} // namespace cantornet
