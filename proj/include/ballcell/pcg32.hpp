#pragma once

#include <cstdint>

namespace ballcell {

/// PCG-XSH-RR 64/32 (O'Neill 2014, pcg32 in the reference C library): a 64-bit
/// LCG state permuted to 32-bit outputs. Fully specified, so sequences are
/// identical on every platform. Seeding with (initstate, initseq) matches
/// pcg32_srandom_r; initseq selects one of 2^63 independent streams.
class Pcg32 {
 public:
  Pcg32(std::uint64_t initstate, std::uint64_t initseq) { seed(initstate, initseq); }

  void seed(std::uint64_t initstate, std::uint64_t initseq);
  std::uint32_t next();
  /// Uniform integer in [0, bound) by rejection of the biased low range.
  std::uint32_t bounded(std::uint32_t bound);

 private:
  std::uint64_t state_ = 0;
  std::uint64_t inc_ = 0;
};

}  // namespace ballcell
