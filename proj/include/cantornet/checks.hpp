#pragma once

#include <cstdint>
#include <string>

#include "cantornet/network.hpp"
#include "cantornet/spectral.hpp"

namespace cantornet {

struct CheckOptions {
    std::uint64_t box_samples = 10000; // random states for the codomain check
    std::uint64_t orbit_steps = 10000; // orbit length for the invariance check
    std::uint64_t sweep_count = 10000; // random t draws for ray/conjugacy sweeps
    std::uint64_t rng_seed = 12345;
};

struct CheckReport {
    // Matrix requirements: strict positivity, sums inside (3/4, 1).
    ValidationReport validation;

    // False when validation failed and the dynamical checks were skipped.
    bool dynamics_evaluated = false;

    // Threshold/eigenvalue ordering 1/2 < theta < rho < 1.
    double theta = 0.0;
    double rho = 0.0;
    double pi_residual = 0.0;
    bool spectral_bounds_pass = false;

    // Codomain: F maps [0,1]^n into the box prod_i [0, v_i].
    double box_max_overshoot = 0.0; // worst pre-clamp excursion outside the box
    bool box_invariance_pass = false;

    // Ray invariance: F(t v) stays on the ray.
    double max_off_ray = 0.0;
    bool line_invariance_pass = false;

    // One-step conjugacy: F(t v) = g_tilde(t) v.
    double max_diagram_residual = 0.0;
    bool conjugacy_pass = false;

    bool all_pass() const {
        return validation.ok() && dynamics_evaluated && spectral_bounds_pass &&
               box_invariance_pass && line_invariance_pass && conjugacy_pass;
    }
};

// Runs the full verification battery. A matrix failing validation produces a
// report with the dynamical sections skipped rather than an exception.
CheckReport run_checks(const Matrix& m, const DeltaParams& dp, const CheckOptions& opt);

std::string check_report_to_json(const CheckReport& r);

} // namespace cantornet
