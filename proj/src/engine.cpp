#include "cantornet/engine.hpp"

#include <cmath>

#include "cantornet/errors.hpp"

namespace cantornet {

namespace {

constexpr int kFracBits = 120;

// Exact conversion of a double in [0, 1] to 120-bit fixed point. Any double
// in this range has its least significant bit at 2^-1074 in principle, but
// values below 2^-67 would underflow the grid; they are truncated toward
// zero, an error below the iterator's own quantization.
uint128 to_fixed(double t0) {
    if (t0 == 0.0) return 0;
    int e = 0;
    const double mant = std::frexp(t0, &e); // t0 = mant * 2^e, mant in [0.5, 1)
    const auto m53 = static_cast<std::uint64_t>(std::ldexp(mant, 53)); // exact integer
    const int shift = kFracBits - 53 + e;
    if (shift >= 0) return static_cast<uint128>(m53) << shift;
    if (shift <= -64) return 0;
    return static_cast<uint128>(m53 >> (-shift));
}

} // namespace

ExactScalarIterator::ExactScalarIterator(double t0, const DeltaParams& dp) {
    if (!(t0 >= 0.0) || !(t0 <= 1.0))
        throw domain_error("ExactScalarIterator: t0 must lie in [0, 1]");
    // D = num * 2^(120 - (K+1)) represents delta exactly; K <= 64 keeps it
    // within 120 bits. TH = theta * 2^120 = 2^121 - 2 D, also exact.
    D_ = dp.num << (kFracBits - static_cast<int>(dp.K + 1));
    const uint128 one = static_cast<uint128>(1) << kFracBits;
    TH_ = (one << 1) - (D_ << 1);
    m_ = to_fixed(t0);
}

void ExactScalarIterator::advance() {
    const uint128 one = static_cast<uint128>(1) << kFracBits;
    if (m_ < TH_)
        m_ = (m_ >> 1) + D_;
    else
        m_ = (m_ >> 1) + D_ - one;
    // Left branch stays strictly below one; the right branch stays
    // nonnegative because m >= TH implies m/2 + D >= one exactly.
}

double ExactScalarIterator::value() const {
    // uint128 -> double rounds to nearest; scaling by 2^-120 is exact.
    return std::ldexp(static_cast<double>(m_), -kFracBits);
}

bool ExactScalarIterator::right() const { return m_ >= TH_; }

ScalarOrbit true_orbit(double t0, std::uint64_t N, const DeltaParams& dp) {
    ScalarOrbit o;
    o.t0 = t0;
    o.values.reserve(N + 1);
    o.branches.reserve(N + 1);
    ExactScalarIterator it(t0, dp);
    for (std::uint64_t k = 0;; ++k) {
        o.values.push_back(it.value());
        o.branches.push_back(it.right() ? 1 : 0);
        if (k == N) break;
        it.advance();
    }
    return o;
}

} // namespace cantornet
