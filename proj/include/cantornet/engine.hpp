#pragma once

#include <cstdint>

#include "cantornet/fibonacci.hpp"
#include "cantornet/line_map.hpp"

namespace cantornet {

// Fixed-point iterator for the scalar map at 120 fractional bits.
//
// The truncated delta_K is an exact dyadic rational (num / 2^(K+1)), and
// the orbit contracts onto a cycle that passes within one double ulp of
// the branch threshold theta. Double-precision branch decisions near that
// cycle are therefore decided by accumulated rounding rather than by the
// map itself, and a single misdecision displaces the orbit by ~1/2.
// Statistical estimates (attractor point sets, branch frequencies,
// omega-limit tails) therefore iterate here: state m represents
// t = m / 2^120, the update m' = (m >> 1) + D [- 2^120 on the right
// branch] commits one truncation of 2^-120 per step against exact branch
// decisions, and the self-error contracts by 1/2 each step, so the
// computed orbit tracks the exact orbit to ~2^-119 -- far below the
// ~2^-64 distance at which the true cycle approaches the discontinuity.
class ExactScalarIterator {
public:
    ExactScalarIterator(double t0, const DeltaParams& dp);

    void advance();

    // Current point, correctly rounded to double.
    double value() const;

    // Exact branch decision at the current point (true = right, t >= theta).
    bool right() const;

private:
    uint128 m_ = 0;
    uint128 D_ = 0;   // delta * 2^120, exact
    uint128 TH_ = 0;  // theta * 2^120, exact
};

// Orbit of g iterated by ExactScalarIterator; values are correctly rounded
// doubles of the high-precision states, branches are the exact decisions.
ScalarOrbit true_orbit(double t0, std::uint64_t N, const DeltaParams& dp);

} // namespace cantornet
