#include "cantornet/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <gmpxx.h>

#include "cantornet/engine.hpp"
#include "cantornet/errors.hpp"

namespace cantornet {

RotationMap make_rotation() {
    RotationMap rm;
    rm.alpha = (3.0 - std::sqrt(5.0)) / 2.0;
    rm.one_minus_alpha = 1.0 - rm.alpha;
    return rm;
}

double rotation_step(double t, const RotationMap& rm) {
    if (!(t >= 0.0) || !(t <= 1.0)) throw domain_error("rotation_step: argument must lie in [0, 1]");
    if (t < rm.one_minus_alpha) return t + rm.alpha;
    return (t + rm.alpha) - 1.0; // exact 0 at t = 1 - alpha
}

double itinerary_frequency(const ScalarOrbit& orbit) {
    if (orbit.branches.empty()) throw domain_error("itinerary_frequency: empty orbit");
    std::uint64_t right = 0;
    for (std::uint8_t b : orbit.branches) right += b;
    return static_cast<double>(right) / static_cast<double>(orbit.branches.size());
}

AttractorApprox attractor_estimate(double t0, std::uint64_t burn_in,
                                   std::uint64_t samples, const DeltaParams& dp,
                                   double resolution) {
    if (samples == 0) throw domain_error("attractor_estimate: samples must be >= 1");
    if (!(resolution > 0.0)) throw domain_error("attractor_estimate: resolution must be positive");
    AttractorApprox a;
    a.burn_in = burn_in;
    a.sample_count = samples;
    a.seed_t = t0;
    a.resolution = resolution;

    ExactScalarIterator it(t0, dp);
    for (std::uint64_t k = 0; k < burn_in; ++k) it.advance();
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(samples, 1 << 22)));
    for (std::uint64_t k = 0; k < samples; ++k) {
        vals.push_back(it.value());
        it.advance();
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (double p : vals) {
        if (a.points.empty() || p - a.points.back() > resolution) a.points.push_back(p);
    }
    return a;
}

namespace {

double dist_to_sorted(const std::vector<double>& s, double x) {
    auto it = std::lower_bound(s.begin(), s.end(), x);
    double d = std::numeric_limits<double>::infinity();
    if (it != s.end()) d = std::fmin(d, std::fabs(*it - x));
    if (it != s.begin()) d = std::fmin(d, std::fabs(*(it - 1) - x));
    return d;
}

} // namespace

double hausdorff_distance(const std::vector<double>& A, const std::vector<double>& B) {
    if (A.empty() || B.empty()) throw domain_error("hausdorff_distance: empty set");
    std::vector<double> sa = A, sb = B;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    double h = 0.0;
    for (double x : sa) h = std::fmax(h, dist_to_sorted(sb, x));
    for (double x : sb) h = std::fmax(h, dist_to_sorted(sa, x));
    return h;
}

std::uint64_t box_count(const AttractorApprox& A, double scale) {
    if (!(scale > 0.0) || !(scale < 1.0)) throw domain_error("box_count: scale must lie in (0, 1)");
    std::uint64_t count = 0;
    bool have_prev = false;
    double prev = 0.0;
    for (double p : A.points) { // points are sorted, so distinct boxes arrive in order
        const double b = std::floor(p / scale);
        if (!have_prev || b != prev) ++count;
        prev = b;
        have_prev = true;
    }
    return count;
}

OmegaReport omega_limit_check(double t0, const AttractorApprox& A,
                              std::uint64_t tail_start, std::uint64_t tail_len,
                              double tol, const DeltaParams& dp) {
    if (A.points.empty()) throw domain_error("omega_limit_check: empty attractor estimate");
    if (tail_len == 0) throw domain_error("omega_limit_check: tail_len must be >= 1");
    if (dist_to_sorted(A.points, t0) > tol)
        throw domain_error("omega_limit_check: t0 is not within tol of the estimate");

    OmegaReport r;
    r.t0 = t0;
    r.tail_start = tail_start;
    r.tail_len = tail_len;
    r.tol = tol;

    ExactScalarIterator it(t0, dp);
    for (std::uint64_t k = 0; k < tail_start; ++k) it.advance();

    const std::size_t m = A.points.size();
    std::vector<double> nearest(m, std::numeric_limits<double>::infinity());
    double tail_to_set = 0.0;
    for (std::uint64_t k = 0; k < tail_len; ++k) {
        const double x = it.value();
        tail_to_set = std::fmax(tail_to_set, dist_to_sorted(A.points, x));
        const auto lb = std::lower_bound(A.points.begin(), A.points.end(), x);
        const std::size_t idx = static_cast<std::size_t>(lb - A.points.begin());
        if (idx < m) nearest[idx] = std::fmin(nearest[idx], std::fabs(A.points[idx] - x));
        if (idx > 0) nearest[idx - 1] = std::fmin(nearest[idx - 1], std::fabs(A.points[idx - 1] - x));
        it.advance();
    }
    double set_to_tail = 0.0;
    for (double d : nearest) set_to_tail = std::fmax(set_to_tail, d);
    r.tail_to_set = tail_to_set;
    r.set_to_tail = set_to_tail;
    r.pass = tail_to_set <= tol && set_to_tail <= tol;
    return r;
}

namespace {

mpq_class mpq_from_uint128(uint128 x) {
    const std::uint64_t hi = static_cast<std::uint64_t>(x >> 64);
    const std::uint64_t lo = static_cast<std::uint64_t>(x);
    mpz_class z(static_cast<unsigned long>(hi));
    z <<= 64;
    z += mpz_class(static_cast<unsigned long>(lo));
    return mpq_class(z);
}

mpq_class pow2_inverse(unsigned bits) {
    mpz_class den(1);
    den <<= bits;
    return mpq_class(mpz_class(1), den);
}

} // namespace

SensitivityReport sensitivity_probe(double t0, double epsilon, std::uint64_t max_k,
                                    const DeltaParams& dp, double v_norm2) {
    if (!(epsilon > 0.0)) throw domain_error("sensitivity_probe: epsilon must be positive");
    if (!(t0 - epsilon >= 0.0) || !(t0 + epsilon <= 1.0))
        throw domain_error("sensitivity_probe: (t0 - eps, t0 + eps) must lie inside [0, 1]");

    // Everything below is a dyadic rational: t0 and epsilon are doubles, and
    // delta = num / 2^(K+1) exactly, so interval tracking is exact.
    const mpq_class dq = mpq_from_uint128(dp.num) * pow2_inverse(dp.K + 1);
    const mpq_class th = 2 - 2 * dq;
    const mpq_class q0(t0), eps(epsilon);
    mpq_class a = q0 - eps, b = q0 + eps;

    auto g_exact = [&](const mpq_class& t) -> mpq_class {
        if (t < th) return t / 2 + dq;
        return t / 2 + dq - 1;
    };

    std::vector<bool> right_branch;
    std::uint64_t k = 0;
    while (!(a < th && th < b)) {
        if (k >= max_k)
            throw capture_error("sensitivity_probe: discontinuity not captured within max_k");
        const bool right = !(b <= th); // interval lies entirely on one side
        if (right) {
            a = a / 2 + dq - 1;
            b = b / 2 + dq - 1;
        } else {
            a = a / 2 + dq;
            b = b / 2 + dq;
        }
        right_branch.push_back(right);
        ++k;
    }

    // Pull theta back through the affine branch composition to the unique
    // preimage p inside the original interval.
    mpq_class p = th;
    for (auto itb = right_branch.rbegin(); itb != right_branch.rend(); ++itb) {
        p = 2 * (p - dq);
        if (*itb) p += 2;
    }

    // Witness on the side of p opposite t0, half an epsilon away, clipped
    // into the interval midpoint when that would leave J.
    mpq_class s0;
    if (q0 >= p) {
        s0 = p - eps / 2;
        if (s0 <= q0 - eps) s0 = (p + (q0 - eps)) / 2;
    } else {
        s0 = p + eps / 2;
        if (s0 >= q0 + eps) s0 = (p + (q0 + eps)) / 2;
    }

    mpq_class us = s0, ut = q0;
    for (std::uint64_t j = 0; j <= k; ++j) {
        us = g_exact(us);
        ut = g_exact(ut);
    }
    mpq_class sep = us - ut;
    if (sep < 0) sep = -sep;

    SensitivityReport r;
    r.t0 = t0;
    r.epsilon = epsilon;
    r.k_capture = k;
    // The exact witness lies strictly inside (t0 - eps, t0 + eps); nudge the
    // double image back inside if the conversion lands a sub-ulp outside.
    double w = s0.get_d();
    while (std::fabs(w - t0) > epsilon) w = std::nextafter(w, t0);
    r.witness_s0 = w;
    r.separation = sep.get_d();
    if (!std::isnan(v_norm2)) r.eta_network = r.separation * v_norm2;
    return r;
}

} // namespace cantornet
