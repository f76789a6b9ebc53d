#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "cantornet/errors.hpp"
#include "cantornet/fibonacci.hpp"
#include "cantornet/network.hpp"
#include "cantornet/rng.hpp"

using namespace cantornet;

namespace {

NetworkParams instance(std::size_t n, std::uint64_t seed, double sum) {
    return make_network(generate_matrix(n, seed, sum, SumMode::row), compute_delta(64));
}

} // namespace

TEST_CASE("construction wires the eigenpair and threshold constants") {
    const NetworkParams p = instance(4, 7, 0.875);
    CHECK(p.n() == 4);
    CHECK(p.pi_residual <= 1e-12);
    CHECK(p.rho == doctest::Approx(0.875).epsilon(1e-12));

    double vsum = 0.0, ss = 0.0;
    for (double vi : p.v) {
        CHECK(vi > 0.0);
        vsum += vi;
        ss += vi * vi;
    }
    CHECK(vsum == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(p.v_norm2 == doctest::Approx(std::sqrt(ss)).epsilon(1e-15));

    for (std::size_t i = 0; i < p.n(); ++i) {
        CHECK(p.hi[i] == p.rho * p.v[i]);
        CHECK(p.lo[i] == p.dp.theta * p.hi[i]);
        CHECK(p.lo[i] < p.hi[i]);
        CHECK(p.add_left[i] == p.dp.delta * p.v[i]);
        CHECK(p.add_mid[i] == (p.dp.delta - 1.0) * p.v[i]);
        CHECK(p.add_high[i] == (p.dp.delta - 0.5) * p.v[i]);
    }
    CHECK(p.inv_two_rho == 1.0 / (2.0 * p.rho));
}

TEST_CASE("construction rejects invalid matrices") {
    Matrix m;
    m.n = 2;
    m.a = {0.7, 0.1, 0.3, 0.9}; // second row sums to 1.2
    CHECK_THROWS_AS(make_network(m, compute_delta(64)), validation_error);
}

TEST_CASE("activation branch values at the anchors") {
    const NetworkParams p = instance(4, 7, 0.875);
    for (std::size_t i = 0; i < p.n(); ++i) {
        // Zero input lands on the left branch offset exactly.
        CHECK(activation_raw(p, i, 0.0) == p.add_left[i]);

        // At the jump threshold the middle branch applies; the exact value
        // of the map there is 0, reached within a few roundings.
        const double at_lo = activation_raw(p, i, p.lo[i]);
        CHECK(std::fabs(at_lo) <= 4e-16);

        // Just below the jump the left branch applies and the value is near
        // v_i; the gap across the threshold is the jump height v_i.
        const double below_lo = activation_raw(p, i, std::nextafter(p.lo[i], 0.0));
        CHECK(below_lo == doctest::Approx(p.v[i]).epsilon(1e-12));
        CHECK(below_lo - at_lo == doctest::Approx(p.v[i]).epsilon(1e-12));

        // The middle and upper branches agree at rho * v_i: continuity.
        const double at_hi = activation_raw(p, i, p.hi[i]);
        const double below_hi = activation_raw(p, i, std::nextafter(p.hi[i], 0.0));
        CHECK(at_hi == p.add_high[i]);
        CHECK(std::fabs(below_hi - at_hi) <= 4e-16);

        // Saturated branch is constant.
        CHECK(activation_raw(p, i, p.hi[i] * 2.0) == p.add_high[i]);
    }
}

TEST_CASE("activation clamps into the box and rejects negative input") {
    const NetworkParams p = instance(4, 7, 0.875);
    Rng rng(99);
    for (int s = 0; s < 1000; ++s) {
        const double x = 2.0 * rng.u01();
        for (std::size_t i = 0; i < p.n(); ++i) {
            const double y = activation(p, i, x);
            CHECK(y >= 0.0);
            CHECK(y <= p.v[i]);
        }
    }
    CHECK_THROWS_AS(activation_raw(p, 0, -1e-12), domain_error);
}

TEST_CASE("one step from the eigenvector saturates every neuron") {
    const NetworkParams p = instance(8, 3, 0.875);
    // W v = rho v, so every weighted input sits at the upper threshold and
    // the image is (delta - 1/2) v, up to the residual of the eigenpair.
    const std::vector<double> y = step(p, p.v);
    for (std::size_t i = 0; i < p.n(); ++i)
        CHECK(y[i] == doctest::Approx(p.add_high[i]).epsilon(1e-12));
}

TEST_CASE("zero state maps to delta * v") {
    const NetworkParams p = instance(8, 3, 0.875);
    const std::vector<double> y = step(p, std::vector<double>(p.n(), 0.0));
    for (std::size_t i = 0; i < p.n(); ++i) CHECK(y[i] == p.add_left[i]);
}

TEST_CASE("step validates its input") {
    const NetworkParams p = instance(4, 7, 0.875);
    std::vector<double> x(4, 0.5);

    std::vector<double> wrong_size(3, 0.5);
    CHECK_THROWS_AS(step(p, wrong_size), domain_error);

    std::vector<double> negative = x;
    negative[1] = -0.1;
    CHECK_THROWS_AS(step(p, negative), domain_error);

    std::vector<double> too_big = x;
    too_big[2] = 1.1;
    CHECK_THROWS_AS(step(p, too_big), domain_error);

    std::vector<double> nan_state = x;
    nan_state[0] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(step(p, nan_state), domain_error);

    // The closed unit cube itself is fine.
    CHECK_NOTHROW(step(p, std::vector<double>(4, 1.0)));
}

TEST_CASE("random states map into the box") {
    for (std::size_t n : {1, 2, 16, 64}) {
        const NetworkParams p = instance(n, 5, 0.99);
        Rng rng(1234);
        std::vector<double> x(n);
        for (int s = 0; s < 1000; ++s) {
            for (auto& xi : x) xi = rng.u01();
            const std::vector<double> y = step(p, x);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(y[i] >= 0.0);
                CHECK(y[i] <= p.v[i]);
            }
        }
    }
}

TEST_CASE("orbits stay inside the box") {
    const NetworkParams p = instance(8, 11, 0.76);
    std::vector<double> x = p.v;
    for (int k = 0; k < 10000; ++k) {
        x = step(p, x);
        for (std::size_t i = 0; i < p.n(); ++i) {
            CHECK(x[i] >= 0.0);
            CHECK(x[i] <= p.v[i]);
        }
    }
}

TEST_CASE("simulation records the requested steps") {
    const NetworkParams p = instance(4, 7, 0.875);
    const std::vector<double> x0(p.n(), 0.25);

    const Orbit only_start = simulate(p, x0, 0);
    CHECK(only_start.ks == std::vector<std::uint64_t>{0});
    CHECK(only_start.states == x0);

    const Orbit dense = simulate(p, x0, 3);
    CHECK(dense.ks == std::vector<std::uint64_t>{0, 1, 2, 3});
    CHECK(dense.states.size() == 4 * p.n());

    const Orbit sparse = simulate(p, x0, 25, 10);
    CHECK(sparse.ks == std::vector<std::uint64_t>{0, 10, 20, 25});

    // The recorded rows agree with stepping by hand.
    std::vector<double> x = x0;
    x = step(p, x);
    for (std::size_t i = 0; i < p.n(); ++i) CHECK(dense.states[p.n() + i] == x[i]);

    CHECK_THROWS_AS(simulate(p, x0, 5, 0), domain_error);
}
