#include "cantornet/fibonacci.hpp"

#include <cmath>
#include <stdexcept>

#include "cantornet/errors.hpp"

namespace cantornet {

std::uint64_t isqrt_u128(uint128 x) {
    if (x == 0) return 0;
    constexpr std::uint64_t u64_max = 0xFFFFFFFFFFFFFFFFULL;
    // Seed from long double (64-bit mantissa on x86), then correct; the seed
    // is within a few ulp, so a short descent settles on the exact floor.
    // Near 2^128 the rounded seed can reach 2^64, which a uint64_t cast
    // cannot represent, so clamp before converting.
    const long double rl = sqrtl(static_cast<long double>(x));
    std::uint64_t r = rl >= 18446744073709551615.0L ? u64_max
                                                    : static_cast<std::uint64_t>(rl);
    while (r > 0 && static_cast<uint128>(r) * r > x) --r;
    while (r < u64_max && static_cast<uint128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

std::uint64_t floor_m_phi(std::uint64_t m) {
    constexpr std::uint64_t limit = 2600000000000000000ULL; // 5 m^2 < 2^128 with margin
    if (m >= limit) throw domain_error("floor_m_phi: argument too large for exact arithmetic");
    const uint128 m128 = m;
    const std::uint64_t s = isqrt_u128(5 * m128 * m128);
    return (m + s) / 2;
}

std::uint32_t fib_digit(std::uint64_t i) {
    return static_cast<std::uint32_t>(2 + floor_m_phi(i + 1) - floor_m_phi(i + 2));
}

std::string fib_word_morphism(std::size_t n) {
    std::string w = "0";
    while (w.size() < n) {
        std::string next;
        next.reserve(2 * w.size());
        for (char c : w) {
            if (c == '0')
                next += "01";
            else
                next += '0';
        }
        w.swap(next);
    }
    w.resize(n);
    return w;
}

std::uint64_t fib_ones(std::uint64_t n) {
    // Telescoped digit sum: sum_{i<n} digit(i) = 2n + 1 - floor((n+1) phi).
    if (n == 0) return 0;
    return 2 * n + 1 - floor_m_phi(n + 1);
}

DeltaParams compute_delta(unsigned K) {
    if (K < 1 || K > 64) throw domain_error("compute_delta: K must be in [1, 64]");
    DeltaParams dp;
    dp.K = K;
    // delta_K = 1/2 + (1/4) sum_{k<K} digit(k) 2^-k = (2^K + S) / 2^(K+1)
    // with S = sum_{k<K} digit(k) 2^(K-1-k), assembled exactly.
    uint128 S = 0;
    for (unsigned k = 0; k < K; ++k) S = (S << 1) | fib_digit(k);
    dp.num = (static_cast<uint128>(1) << K) + S;
    // uint128 -> double conversion rounds to nearest; the scale is a power
    // of two, so dp.delta is the correctly rounded double of num / 2^(K+1).
    dp.delta = std::ldexp(static_cast<double>(dp.num), -static_cast<int>(K + 1));
    // delta in (1/2, 3/4) makes 1 - delta exact (Sterbenz) and the doubling
    // exact, so theta is the exact double counterpart of 2 (1 - delta).
    dp.theta = 2.0 * (1.0 - dp.delta);
    dp.tail_bound = std::ldexp(1.0, -static_cast<int>(K + 1));
    return dp;
}

} // namespace cantornet
