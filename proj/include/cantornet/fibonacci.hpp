#pragma once

#include <cstdint>
#include <string>

namespace cantornet {

using uint128 = unsigned __int128;

// Integer square root, exact for any 128-bit argument.
std::uint64_t isqrt_u128(uint128 x);

// floor(m * phi) with phi the golden ratio, computed exactly in integers as
// (m + isqrt(5 m^2)) / 2. Valid while 5 m^2 fits in 128 bits (m < ~2.6e18).
std::uint64_t floor_m_phi(std::uint64_t m);

// i-th digit (0-based) of the binary golden-rotation word:
// digit(i) = 2 + floor((i+1) phi) - floor((i+2) phi), in {0,1}.
std::uint32_t fib_digit(std::uint64_t i);

// First n digits produced by the substitution 0 -> 01, 1 -> 0.
// Independent oracle for fib_digit.
std::string fib_word_morphism(std::size_t n);

// Number of 1-digits among indices [0, n); closed form 2n + 1 - floor((n+1) phi).
std::uint64_t fib_ones(std::uint64_t n);

struct DeltaParams {
    unsigned K = 64;         // number of digits summed
    double delta = 0.0;      // nearest double to num / 2^(K+1)
    double theta = 0.0;      // 2 * (1 - delta); the subtraction is exact for delta in (1/2, 3/4)
    double tail_bound = 0.0; // 2^-(K+1), bound on |delta_infinity - delta_K|
    uint128 num = 0;         // exact dyadic numerator: delta_K = num / 2^(K+1), needs K+1 bits
};

// delta_K = 1/2 + (1/4) * sum_{k<K} digit(k) / 2^k, assembled exactly in
// integer arithmetic and rounded once to double. Requires 1 <= K <= 64.
DeltaParams compute_delta(unsigned K);

} // namespace cantornet
