#include "ballcell/pcg32.hpp"

namespace ballcell {

namespace {
constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
}

void Pcg32::seed(std::uint64_t initstate, std::uint64_t initseq) {
  state_ = 0;
  inc_ = (initseq << 1u) | 1u;
  next();
  state_ += initstate;
  next();
}

std::uint32_t Pcg32::next() {
  const std::uint64_t old = state_;
  state_ = old * kMultiplier + inc_;
  const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  const auto rot = static_cast<std::uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
}

std::uint32_t Pcg32::bounded(std::uint32_t bound) {
  // 2^32 mod bound values at the bottom of the range are rejected.
  const std::uint32_t threshold = -bound % bound;
  for (;;) {
    const std::uint32_t r = next();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace ballcell
