#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "cantornet/errors.hpp"
#include "cantornet/spectral.hpp"

using namespace cantornet;

TEST_CASE("plain summation is left-to-right up to 64 terms") {
    const double x[] = {0.1, 0.2, 0.3};
    CHECK(stable_sum(x, 3) == ((0.1 + 0.2) + 0.3));
    const double w[] = {2.0, 3.0, 4.0};
    CHECK(weighted_sum(w, x, 3) == ((2.0 * 0.1 + 3.0 * 0.2) + 4.0 * 0.3));
}

TEST_CASE("compensated summation kicks in past 64 terms") {
    // 1e16 swallows unit addends in plain order; compensation recovers them.
    std::vector<double> x(100, 1.0);
    x.front() = 1e16;
    x.back() = -1e16;
    CHECK(stable_sum(x.data(), x.size()) == 98.0);

    std::vector<double> w(100, 1.0);
    CHECK(weighted_sum(w.data(), x.data(), x.size()) == 98.0);
}

TEST_CASE("generation is deterministic in the seed") {
    const Matrix a = generate_matrix(8, 42, 0.875, SumMode::row);
    const Matrix b = generate_matrix(8, 42, 0.875, SumMode::row);
    const Matrix c = generate_matrix(8, 43, 0.875, SumMode::row);
    CHECK(a.a == b.a);
    CHECK(a.a != c.a);
}

TEST_CASE("generated rows sum to the target and validate") {
    for (std::size_t n : {1, 2, 5, 8, 64, 100}) {
        const Matrix m = generate_matrix(n, 7, 0.875, SumMode::row);
        REQUIRE(m.a.size() == n * n);
        for (std::size_t i = 0; i < n; ++i) {
            const double s = stable_sum(&m.a[i * n], n);
            CHECK(s == doctest::Approx(0.875).epsilon(1e-13));
        }
        const ValidationReport r = validate(m);
        CHECK(r.ok());
        CHECK(r.positive);
        CHECK(r.sums_in_range);
        CHECK(r.min_entry > 0.0);
        CHECK(r.min_sum > 0.75);
        CHECK(r.max_sum < 1.0);
    }
}

TEST_CASE("column mode constrains column sums instead") {
    const std::size_t n = 6;
    const Matrix m = generate_matrix(n, 3, 0.8, SumMode::column);
    CHECK(m.mode == SumMode::column);
    std::vector<double> col(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) col[i] = m.at(i, j);
        CHECK(stable_sum(col.data(), n) == doctest::Approx(0.8).epsilon(1e-13));
    }
    CHECK(validate(m).ok());
}

TEST_CASE("one-neuron generation yields the target itself") {
    const Matrix m = generate_matrix(1, 9, 0.8, SumMode::row);
    CHECK(m.a.size() == 1);
    CHECK(m.a[0] == 0.8);
}

TEST_CASE("generation rejects parameters outside the requirements") {
    CHECK_THROWS_AS(generate_matrix(0, 1, 0.875, SumMode::row), domain_error);
    CHECK_THROWS_AS(generate_matrix(4, 1, 0.75, SumMode::row), domain_error);
    CHECK_THROWS_AS(generate_matrix(4, 1, 1.0, SumMode::row), domain_error);
    CHECK_THROWS_AS(generate_matrix(4, 1, 0.5, SumMode::row), domain_error);
    CHECK_THROWS_AS(generate_matrix(4, 1, 1.2, SumMode::row), domain_error);
}

TEST_CASE("validation flags violations") {
    Matrix m = generate_matrix(4, 11, 0.9, SumMode::row);

    Matrix zero_entry = m;
    zero_entry.at(1, 2) = 0.0;
    CHECK_FALSE(validate(zero_entry).positive);
    CHECK_FALSE(validate(zero_entry).ok());

    Matrix big_sum = m;
    big_sum.at(0, 0) += 0.5; // pushes the row sum past 1
    const ValidationReport r = validate(big_sum);
    CHECK(r.positive);
    CHECK_FALSE(r.sums_in_range);
    CHECK(r.max_sum > 1.0);
    CHECK_FALSE(r.ok());

    Matrix empty;
    CHECK_FALSE(validate(empty).ok());
}

TEST_CASE("power iteration recovers a dominant eigenpair with a known answer") {
    // Row sums 0.8 and 0.9; dominant eigenvalue (1.3 + sqrt(0.13)) / 2.
    Matrix m;
    m.n = 2;
    m.a = {0.7, 0.1, 0.3, 0.6};
    const Eigenpair e = power_iteration(m);
    CHECK(e.residual <= 1e-12);
    // The 1e-12 residual stopping rule bounds the eigenpair error only up to
    // the spectral gap, so the tolerances here are a few times wider.
    CHECK(e.rho == doctest::Approx(0.8302775637731994).epsilon(5e-12));
    REQUIRE(e.v.size() == 2);
    CHECK(e.v[0] == doctest::Approx(0.4342585459106648).epsilon(5e-11));
    CHECK(e.v[1] == doctest::Approx(0.5657414540893351).epsilon(5e-11));
    CHECK(e.v[0] + e.v[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("power iteration on a one-neuron matrix is immediate") {
    Matrix m;
    m.n = 1;
    m.a = {0.8};
    const Eigenpair e = power_iteration(m);
    CHECK(e.rho == 0.8);
    CHECK(e.v[0] == 1.0);
    CHECK(e.residual == 0.0);
}

TEST_CASE("equal row sums force the uniform eigenvector") {
    // Every row sums to the same value, so (1/n, ..., 1/n) is exactly the
    // dominant eigenvector and rho is the common row sum.
    for (std::size_t n : {2, 8, 64, 100}) {
        const Matrix m = generate_matrix(n, 5, 0.99, SumMode::row);
        const Eigenpair e = power_iteration(m);
        CHECK(e.residual <= 1e-12);
        CHECK(e.rho == doctest::Approx(0.99).epsilon(1e-12));
        for (double vi : e.v)
            CHECK(vi == doctest::Approx(1.0 / static_cast<double>(n)).epsilon(1e-10));
    }
}

TEST_CASE("column-mode matrices have the same dominant eigenvalue") {
    const Matrix m = generate_matrix(8, 21, 0.76, SumMode::column);
    const Eigenpair e = power_iteration(m);
    CHECK(e.residual <= 1e-12);
    // Column sums all equal 0.76, so the spectral radius is 0.76 (the
    // transpose has the uniform eigenvector).
    CHECK(e.rho == doctest::Approx(0.76).epsilon(1e-10));
    double sum = 0.0;
    for (double vi : e.v) {
        CHECK(vi > 0.0);
        sum += vi;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("power iteration refuses invalid matrices") {
    Matrix m;
    m.n = 2;
    m.a = {0.7, 0.1, 0.3, -0.6};
    CHECK_THROWS_AS(power_iteration(m), validation_error);
}
