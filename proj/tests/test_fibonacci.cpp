#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "cantornet/errors.hpp"
#include "cantornet/fibonacci.hpp"

using namespace cantornet;

TEST_CASE("integer square root is exact across the range") {
    CHECK(isqrt_u128(0) == 0);
    CHECK(isqrt_u128(1) == 1);
    CHECK(isqrt_u128(2) == 1);
    CHECK(isqrt_u128(3) == 1);
    CHECK(isqrt_u128(4) == 2);
    CHECK(isqrt_u128(~static_cast<uint128>(0)) == 0xFFFFFFFFFFFFFFFFULL);

    const std::uint64_t xs[] = {3ULL, 12345ULL, (1ULL << 32) + 987654321ULL,
                                (1ULL << 63) + 11ULL, 0xFFFFFFFFFFFFFFFFULL};
    for (std::uint64_t x : xs) {
        const uint128 sq = static_cast<uint128>(x) * x;
        CHECK(isqrt_u128(sq) == x);
        CHECK(isqrt_u128(sq - 1) == x - 1);
        if (sq + 2 * static_cast<uint128>(x) >= sq) // no overflow for these xs
            CHECK(isqrt_u128(sq + 1) == x);
    }
}

TEST_CASE("floor of m*phi on small arguments") {
    const std::uint64_t expected[] = {0, 1, 3, 4, 6, 8, 9, 11, 12, 14, 16};
    for (std::uint64_t m = 0; m <= 10; ++m) CHECK(floor_m_phi(m) == expected[m]);
    CHECK_THROWS_AS(floor_m_phi(3000000000000000000ULL), domain_error);
}

TEST_CASE("digit formula produces the golden-rotation word") {
    const std::uint32_t first5[] = {0, 1, 0, 0, 1};
    for (std::uint64_t i = 0; i < 5; ++i) CHECK(fib_digit(i) == first5[i]);

    std::string prefix;
    for (std::uint64_t i = 0; i < 51; ++i) prefix += static_cast<char>('0' + fib_digit(i));
    CHECK(prefix == "010010100100101001010010010100100101001010010010100");
}

TEST_CASE("substitution oracle agrees with the floor formula") {
    const std::size_t n = 1000000;
    const std::string w = fib_word_morphism(n);
    REQUIRE(w.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
        if (static_cast<std::uint32_t>(w[i] - '0') != fib_digit(i)) {
            FAIL("digit mismatch at index ", i);
        }
    }
}

TEST_CASE("digit-count closed form and limiting frequency") {
    CHECK(fib_ones(0) == 0);
    CHECK(fib_ones(1) == 0);
    CHECK(fib_ones(2) == 1);
    CHECK(fib_ones(16) == 6);
    CHECK(fib_ones(55) == 21);
    CHECK(fib_ones(1000000) == 381966);

    // Counting directly matches the closed form.
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < 2000; ++i) {
        count += fib_digit(i);
        CHECK(fib_ones(i + 1) == count);
    }

    // Frequency of 1s approaches 2 - phi within the discrepancy bound 2/N.
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double n = 1000000.0;
    CHECK(std::fabs(381966.0 / n - (2.0 - phi)) <= 2.0 / n);
}

TEST_CASE("threshold parameters at small truncation depth are exact dyadics") {
    const DeltaParams d1 = compute_delta(1);
    // One digit (0): delta = 1/2, theta = 1.
    CHECK(d1.delta == 0.5);
    CHECK(d1.theta == 1.0);
    CHECK(d1.tail_bound == 0.25);
    CHECK(static_cast<std::uint64_t>(d1.num) == 2);

    const DeltaParams d2 = compute_delta(2);
    // Digits 0,1: delta = 1/2 + (1/4)(0 + 1/2) = 5/8.
    CHECK(d2.delta == 0.625);
    CHECK(d2.theta == 0.75);
    CHECK(d2.tail_bound == 0.125);
    CHECK(static_cast<std::uint64_t>(d2.num) == 5);
}

TEST_CASE("threshold parameters at full depth") {
    const DeltaParams d = compute_delta(64);
    CHECK(d.K == 64);
    // Exact numerator 2^64 + S, independently derived.
    const uint128 expected_num =
        (static_cast<uint128>(1) << 64) + 5353181620609389716ULL;
    CHECK(d.num == expected_num);
    // Correctly rounded double values of num/2^65 and 2(1 - delta).
    CHECK(d.delta == 0x1.4a4a525252929p-1);
    CHECK(d.theta == 0x1.6b6b5b5b5adaep-1);
    CHECK(d.theta == 2.0 * (1.0 - d.delta));
    CHECK(d.tail_bound == 0x1p-65);
    // delta lies strictly inside (5/8, 3/4).
    CHECK(d.delta > 0.625);
    CHECK(d.delta < 0.75);
}

TEST_CASE("truncation depth is monotone and bounded") {
    double prev = 0.0;
    for (unsigned K = 1; K <= 64; ++K) {
        const DeltaParams d = compute_delta(K);
        CHECK(d.delta >= prev);          // partial sums are nondecreasing
        CHECK(d.delta >= 0.5);
        CHECK(d.delta < 0.75);
        CHECK(d.theta == 2.0 * (1.0 - d.delta));
        prev = d.delta;
    }
}

TEST_CASE("truncation depth outside [1, 64] is rejected") {
    CHECK_THROWS_AS(compute_delta(0), domain_error);
    CHECK_THROWS_AS(compute_delta(65), domain_error);
}
