#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "cantornet/fibonacci.hpp"
#include "cantornet/line_map.hpp"

namespace cantornet {

struct RotationMap {
    double alpha = 0.0;           // (3 - sqrt(5)) / 2
    double one_minus_alpha = 0.0; // branch threshold
};

RotationMap make_rotation();

// Rigid rotation by alpha on [0,1]: t + alpha, wrapped once past 1.
// Throws domain_error outside [0,1].
double rotation_step(double t, const RotationMap& rm);

// Fraction of orbit entries on the right branch (t >= theta), taken from the
// recorded itinerary. For high-precision orbits the itinerary carries the
// exact branch decisions, which is what the frequency statement is about.
double itinerary_frequency(const ScalarOrbit& orbit);

struct AttractorApprox {
    std::vector<double> points;  // sorted, deduplicated
    std::uint64_t burn_in = 0;
    std::uint64_t sample_count = 0;
    double seed_t = 0.0;
    double resolution = 1e-14;
};

// Burn in, then collect samples of the high-precision orbit, sort and merge
// points closer than resolution.
AttractorApprox attractor_estimate(double t0, std::uint64_t burn_in,
                                   std::uint64_t samples, const DeltaParams& dp,
                                   double resolution = 1e-14);

double hausdorff_distance(const std::vector<double>& A, const std::vector<double>& B);

// Number of width-scale dyadic boxes [k*scale, (k+1)*scale) meeting the set.
std::uint64_t box_count(const AttractorApprox& A, double scale);

struct OmegaReport {
    double t0 = 0.0;
    std::uint64_t tail_start = 0;
    std::uint64_t tail_len = 0;
    double tol = 0.0;
    double tail_to_set = 0.0; // max over tail points of distance to the set
    double set_to_tail = 0.0; // max over set points of distance to the tail
    bool pass = false;
};

// Checks that the orbit tail from t0 stays tol-close to A and visits a
// tol-neighborhood of every point of A. Precondition: t0 within tol of A.
OmegaReport omega_limit_check(double t0, const AttractorApprox& A,
                              std::uint64_t tail_start, std::uint64_t tail_len,
                              double tol, const DeltaParams& dp);

struct SensitivityReport {
    double t0 = 0.0;
    double epsilon = 0.0;
    std::uint64_t k_capture = 0; // least k with theta inside g^k((t0-eps, t0+eps))
    double witness_s0 = 0.0;     // perturbed start, |witness_s0 - t0| <= epsilon
    double separation = 0.0;     // |g^(k+1)(s0) - g^(k+1)(t0)|, evaluated exactly
    double eta_network = std::numeric_limits<double>::quiet_NaN(); // separation * |v|_2
};

// Tracks the interval J = (t0-eps, t0+eps) under g in exact rational
// arithmetic (every quantity involved is dyadic): while theta is outside,
// J maps to an affine image of exactly half the length; at capture the
// witness is placed on the opposite side of the k-fold preimage of theta
// from t0, and the separation after k+1 exact steps is at least 1/2.
// v_norm2, when supplied, scales the separation into network units.
// Throws domain_error if J is not inside [0,1]; capture_error if max_k is
// exhausted.
SensitivityReport sensitivity_probe(double t0, double epsilon, std::uint64_t max_k,
                                    const DeltaParams& dp,
                                    double v_norm2 = std::numeric_limits<double>::quiet_NaN());

} // namespace cantornet
