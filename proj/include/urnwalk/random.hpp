#pragma once

#include <cstdint>
#include <random>

namespace urnwalk {

/// Maps a 64-bit word to a double strictly inside (0,1) using its top 52 bits;
/// the extremes are 2^-53 and 1 - 2^-53.
inline double to_open_unit(std::uint64_t bits) {
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

/// Uniform (0,1) source for one replica. The engine is seeded from
/// std::seed_seq{seed_lo, seed_hi, replica_lo, replica_hi}; both seed_seq and
/// mt19937_64 are fully specified by the standard, so streams are identical on
/// every conforming platform and do not depend on scheduling.
class ReplicaStream {
 public:
  ReplicaStream(std::uint64_t seed, std::uint64_t replica) {
    std::seed_seq seq{lo(seed), hi(seed), lo(replica), hi(replica)};
    engine_.seed(seq);
  }

  double operator()() { return to_open_unit(engine_()); }

 private:
  static std::uint32_t lo(std::uint64_t x) { return static_cast<std::uint32_t>(x); }
  static std::uint32_t hi(std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); }

  std::mt19937_64 engine_;
};

}  // namespace urnwalk
