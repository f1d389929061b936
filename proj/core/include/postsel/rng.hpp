#pragma once

#include <array>
#include <cstdint>

#include "postsel/normal.hpp"

namespace postsel {

/// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
/// The output block is a pure function of (key, counter), so streams can
/// be placed anywhere in the (seed, stream) grid with no sequential state.
class Philox4x32 {
 public:
  Philox4x32(std::uint64_t key, std::uint64_t counter_high)
      : k0_(static_cast<std::uint32_t>(key)),
        k1_(static_cast<std::uint32_t>(key >> 32)),
        c2_(static_cast<std::uint32_t>(counter_high)),
        c3_(static_cast<std::uint32_t>(counter_high >> 32)) {}

  std::array<std::uint32_t, 4> next_block() {
    std::uint32_t x0 = c0_, x1 = c1_, x2 = c2_, x3 = c3_;
    std::uint32_t k0 = k0_, k1 = k1_;
    for (int r = 0; r < 10; ++r) {
      const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * x0;
      const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * x2;
      const std::uint32_t h0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t l0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t h1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t l1 = static_cast<std::uint32_t>(p1);
      x0 = h1 ^ x1 ^ k0;
      x1 = l1;
      x2 = h0 ^ x3 ^ k1;
      x3 = l0;
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    if (++c0_ == 0) ++c1_;  // c2/c3 are the stream id and never advance
    return {x0, x1, x2, x3};
  }

 private:
  std::uint32_t c0_ = 0, c1_ = 0, c2_ = 0, c3_ = 0;
  std::uint32_t k0_ = 0, k1_ = 0;
};

/// Stream of i.i.d. variates for one (seed, stream) pair. Uniforms are
/// 53-bit, strictly inside (0, 1); normals are inverse-CDF transforms of
/// those uniforms, so the stream is fully specified by the counter layout
/// and the quantile function.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream) : gen_(seed, stream) {}

  double next_uniform() {
    if (pending_) {
      pending_ = false;
      return to_unit(cached_);
    }
    const auto b = gen_.next_block();
    cached_ = (std::uint64_t{b[2]} << 32) | b[3];
    pending_ = true;
    return to_unit((std::uint64_t{b[0]} << 32) | b[1]);
  }

  double next_normal() { return normal_quantile(next_uniform()); }

 private:
  static double to_unit(std::uint64_t x) {
    return (static_cast<double>(x >> 11) + 0.5) * 0x1p-53;
  }

  Philox4x32 gen_;
  std::uint64_t cached_ = 0;
  bool pending_ = false;
};

}  // namespace postsel
