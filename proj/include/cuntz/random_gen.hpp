#ifndef CUNTZ_RANDOM_GEN_HPP
#define CUNTZ_RANDOM_GEN_HPP

#include <cstdint>

#include "cuntz/poly.hpp"

namespace cuntz {

// Seeded random unitary: two independently grown complete prefix codes of
// equal size (leaf splitting within max_len) under a random pairing.
// The requested size is adjusted up to the nearest feasible value
// (a nontrivial complete code over n letters has size 1 mod n-1).
// Deterministic per (n, pairs, max_len, seed).
PolyUnitary random_unitary(int n, int pairs, int max_len, std::uint64_t seed);

}  // namespace cuntz

#endif
