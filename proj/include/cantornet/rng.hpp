#pragma once

#include <cstdint>
#include <random>

namespace cantornet {

// Deterministic uniform draws on the open interval (0,1).
// The mapping ((x >> 11) + 0.5) * 2^-53 never produces 0 or 1, so scaled
// draws stay strictly positive as the positivity requirement demands.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double u01() {
        const std::uint64_t x = gen_();
        return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace cantornet
