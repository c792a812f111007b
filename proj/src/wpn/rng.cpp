#include "wpn/rng.hpp"

namespace wpn {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}

// splitmix64 finalizer
std::uint64_t mix_seed(std::uint64_t z)
{
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index)
{
    return mix_seed(base + kGolden * (index + 1));
}

}  // namespace wpn
