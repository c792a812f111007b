#pragma once

#include <cstdint>
#include <random>

namespace wpn {

// Deterministic stream derivation: master seed -> per-point seed -> per-
// replicate stream. Replicates own private engines, so results are identical
// no matter how replicates are scheduled across threads.

std::uint64_t mix_seed(std::uint64_t z);
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

inline std::mt19937_64 make_replicate_stream(std::uint64_t master,
                                             std::uint64_t point_index,
                                             std::uint64_t replicate_index)
{
    return std::mt19937_64(derive_seed(derive_seed(master, point_index), replicate_index));
}

}  // namespace wpn
