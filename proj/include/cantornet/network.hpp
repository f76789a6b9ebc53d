#pragma once

#include <cstdint>
#include <vector>

#include "cantornet/fibonacci.hpp"
#include "cantornet/spectral.hpp"

namespace cantornet {

struct NetworkParams {
    Matrix W;
    DeltaParams dp;
    double rho = 0.0;
    std::vector<double> v;      // dominant eigenvector, sum-normalized
    double pi_residual = 0.0;   // power-iteration residual
    unsigned pi_iterations = 0;
    double v_norm2 = 0.0;       // Euclidean norm of v

    // Per-neuron activation constants, precomputed once so every evaluation
    // compares against identical thresholds.
    std::vector<double> hi;        // rho * v_i  (upper branch threshold)
    std::vector<double> lo;        // theta * hi_i (lower branch threshold)
    std::vector<double> add_left;  // delta * v_i
    std::vector<double> add_mid;   // (delta - 1) * v_i
    std::vector<double> add_high;  // (delta - 1/2) * v_i
    double inv_two_rho = 0.0;      // 1 / (2 rho)

    std::size_t n() const { return W.n; }
};

// Builds network parameters: validates W, runs power iteration, precomputes
// activation constants. Throws validation_error on invalid W.
NetworkParams make_network(Matrix W, DeltaParams dp, double tol = 1e-12,
                           unsigned max_iter = 100000);

// Three-branch activation of neuron i at weighted input s >= 0:
//   [0, theta*rho*v_i)      ->  s/(2 rho) + delta * v_i
//   [theta*rho*v_i, rho*v_i) ->  s/(2 rho) + (delta - 1) * v_i
//   [rho*v_i, infinity)      ->  (delta - 1/2) * v_i
// The last two branches agree at s = rho*v_i, so the half-open choice does
// not change the function. Raw value, before codomain clamping.
double activation_raw(const NetworkParams& p, std::size_t i, double s);

// activation_raw clamped into [0, v_i]; rounding can overshoot by ~1 ulp and
// the codomain guarantee is part of the contract.
double activation(const NetworkParams& p, std::size_t i, double s);

// One synchronous update y_i = f_i(sum_j w_ij x_j).
// Validates x: finite, and every coordinate in [0, 1 + 1e-9] (no clamping;
// out-of-range input is an error rather than silently masked).
std::vector<double> step(const NetworkParams& p, const std::vector<double>& x);

struct Orbit {
    std::uint64_t steps = 0;
    std::uint64_t record_every = 1;
    std::vector<std::uint64_t> ks;   // recorded step indices
    std::vector<double> states;      // row-major, ks.size() x n
};

// Iterates N steps from x0, recording every record_every-th state (always
// including step 0 and the final state). Deterministic.
Orbit simulate(const NetworkParams& p, const std::vector<double>& x0,
               std::uint64_t N, std::uint64_t record_every = 1);

} // namespace cantornet
