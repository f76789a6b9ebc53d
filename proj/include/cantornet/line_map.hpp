#pragma once

#include <cstdint>
#include <vector>

#include "cantornet/fibonacci.hpp"
#include "cantornet/network.hpp"

namespace cantornet {

// Scalar reduction of the network restricted to the invariant ray {t*v : t>=0}.
// Three branches on [0,theta), [theta,1), [1,inf); the last two agree at t=1.
double g_tilde(double t, const DeltaParams& dp);

// Restriction of g_tilde to [0,1]: two affine branches of slope exactly 1/2
// with a single discontinuity at theta. Throws domain_error outside [0,1].
double g(double t, const DeltaParams& dp);

std::vector<double> embed(double t, const NetworkParams& p); // t * v

struct ProjectResult {
    double t = 0.0;                // least-squares coefficient along v
    double off_ray_residual = 0.0; // max_i |x_i - t v_i|
};

// Projects x onto the ray; throws not_on_line_error when the off-ray
// residual exceeds tol.
ProjectResult project(const std::vector<double>& x, const NetworkParams& p,
                      double tol = 1e-9);

// max_i |F(t v)_i - g_tilde(t) v_i| : the one-step conjugacy defect at t.
double diagram_residual(double t, const NetworkParams& p);

struct ScalarOrbit {
    double t0 = 0.0;
    std::vector<double> values;        // t0, g(t0), ..., g^N(t0)  (N+1 values)
    std::vector<std::uint8_t> branches; // per value: 0 = left (t < theta), 1 = right
};

// Plain double iteration of g. Branch itinerary recorded from the same
// comparisons that select the branch, so itinerary and values are consistent.
ScalarOrbit g_orbit(double t0, std::uint64_t N, const DeltaParams& dp);

} // namespace cantornet
