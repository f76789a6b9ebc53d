#include "cantornet/checks.hpp"

#include <cmath>

#include "cantornet/errors.hpp"
#include "cantornet/io.hpp"
#include "cantornet/line_map.hpp"
#include "cantornet/rng.hpp"

namespace cantornet {

CheckReport run_checks(const Matrix& m, const DeltaParams& dp, const CheckOptions& opt) {
    CheckReport r;
    r.validation = validate(m);
    if (!r.validation.ok()) return r;

    const NetworkParams p = make_network(m, dp);
    r.dynamics_evaluated = true;
    const std::size_t n = p.n();

    r.theta = p.dp.theta;
    r.rho = p.rho;
    r.pi_residual = p.pi_residual;
    r.spectral_bounds_pass =
        0.5 < r.theta && r.theta < r.rho && r.rho < 1.0 && r.pi_residual <= 1e-12;

    // Codomain: clamped outputs stay in [0, v_i] by construction; the raw
    // values must not exceed the box by more than rounding noise, and the
    // orbit must stay inside it.
    Rng rng(opt.rng_seed);
    double overshoot = 0.0;
    bool box_ok = true;
    std::vector<double> x(n), y(n);
    for (std::uint64_t s = 0; s < opt.box_samples; ++s) {
        for (std::size_t i = 0; i < n; ++i) x[i] = rng.u01();
        for (std::size_t i = 0; i < n; ++i) {
            const double acc = weighted_sum(&p.W.a[i * n], x.data(), n);
            const double raw = activation_raw(p, i, acc);
            const double clamped = activation(p, i, acc);
            overshoot = std::fmax(overshoot, raw - p.v[i]);
            overshoot = std::fmax(overshoot, -raw);
            if (clamped < 0.0 || clamped > p.v[i]) box_ok = false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = p.v[i];
    for (std::uint64_t k = 0; k < opt.orbit_steps; ++k) {
        x = step(p, x);
        for (std::size_t i = 0; i < n; ++i)
            if (x[i] < 0.0 || x[i] > p.v[i]) box_ok = false;
    }
    r.box_max_overshoot = overshoot;
    r.box_invariance_pass = box_ok && overshoot <= 1e-12;

    // Ray invariance and one-step conjugacy over random t in [0, 2].
    double max_off_ray = 0.0, max_dr = 0.0;
    for (std::uint64_t s = 0; s < opt.sweep_count; ++s) {
        const double t = 2.0 * rng.u01();
        const std::vector<double> xt = embed(t, p);
        std::vector<double> fx(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double acc = weighted_sum(&p.W.a[i * n], xt.data(), n);
            fx[i] = activation(p, i, acc);
        }
        const double vv = weighted_sum(p.v.data(), p.v.data(), n);
        const double coef = weighted_sum(p.v.data(), fx.data(), n) / vv;
        const double gt = g_tilde(t, p.dp);
        for (std::size_t i = 0; i < n; ++i) {
            max_off_ray = std::fmax(max_off_ray, std::fabs(fx[i] - coef * p.v[i]));
            max_dr = std::fmax(max_dr, std::fabs(fx[i] - gt * p.v[i]));
        }
    }
    r.max_off_ray = max_off_ray;
    r.line_invariance_pass = max_off_ray <= 1e-12;
    r.max_diagram_residual = max_dr;
    r.conjugacy_pass = max_dr <= 1e-12;

    return r;
}

std::string check_report_to_json(const CheckReport& r) {
    JsonWriter w;
    w.begin();
    w.key("validation").begin();
    w.key("positive").value(r.validation.positive);
    w.key("sums_in_range").value(r.validation.sums_in_range);
    w.key("min_entry").value(r.validation.min_entry);
    w.key("min_sum").value(r.validation.min_sum);
    w.key("max_sum").value(r.validation.max_sum);
    w.key("pass").value(r.validation.ok());
    w.end();
    if (r.dynamics_evaluated) {
        w.key("spectral_bounds").begin();
        w.key("theta").value(r.theta);
        w.key("rho").value(r.rho);
        w.key("power_iteration_residual").value(r.pi_residual);
        w.key("pass").value(r.spectral_bounds_pass);
        w.end();
        w.key("box_invariance").begin();
        w.key("max_overshoot").value(r.box_max_overshoot);
        w.key("pass").value(r.box_invariance_pass);
        w.end();
        w.key("line_invariance").begin();
        w.key("max_off_ray_residual").value(r.max_off_ray);
        w.key("pass").value(r.line_invariance_pass);
        w.end();
        w.key("conjugacy").begin();
        w.key("max_diagram_residual").value(r.max_diagram_residual);
        w.key("pass").value(r.conjugacy_pass);
        w.end();
    }
    w.key("pass").value(r.all_pass());
    w.end();
    return w.str();
}

} // namespace cantornet
