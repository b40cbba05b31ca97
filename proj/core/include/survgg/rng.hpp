#pragma once

#include <cstdint>
#include <limits>

namespace survgg {

// PCG64 (XSL-RR output on a 128-bit LCG state).  Streams are selected by the
// increment, so every (seed, stream_id) pair is an independent, reproducible
// generator; chains and Monte Carlo replications each own one stream.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0) {
    const u128 initstate = (static_cast<u128>(splitmix(seed)) << 64) | splitmix(seed + 0x9e3779b97f4a7c15ULL);
    const u128 initseq = (static_cast<u128>(splitmix(stream_id)) << 64) | splitmix(stream_id + 0x7f4a7c15ULL);
    inc_ = (initseq << 1) | 1u;
    state_ = 0u;
    (*this)();
    state_ += initstate;
    (*this)();
  }

  result_type operator()() {
    state_ = state_ * kMultiplier + inc_;
    const std::uint64_t xored =
        static_cast<std::uint64_t>(state_ >> 64) ^ static_cast<std::uint64_t>(state_);
    const unsigned rot = static_cast<unsigned>(state_ >> 122);
    return (xored >> rot) | (xored << ((64u - rot) & 63u));
  }

  // 53-bit uniform in [0,1).
  double next_double() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // strictly inside (0,1); safe as input to log/quantile transforms.
  double next_double_open() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  bool operator==(const RngStream& other) const {
    return state_ == other.state_ && inc_ == other.inc_;
  }

 private:
  using u128 = unsigned __int128;
  static constexpr u128 kMultiplier =
      (static_cast<u128>(2549297995355413924ULL) << 64) | 4865540595714422341ULL;

  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  u128 state_;
  u128 inc_;
};

}  // namespace survgg
