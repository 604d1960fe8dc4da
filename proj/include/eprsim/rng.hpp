// Copyright 2026 The eprsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EPRSIM_RNG_HPP_
#define EPRSIM_RNG_HPP_

#include <array>
#include <cstdint>

namespace eprsim {

// SplitMix64 (Sebastiano Vigna, public domain reference implementation).
// Used only to expand a 64-bit seed into xoshiro state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// xoshiro256** 1.0 (David Blackman and Sebastiano Vigna). The algorithm is
// pinned so that transcripts reproduce bit-exactly across platforms and
// implementations; test vectors live in tests/test_rng.cpp and the README.
class Xoshiro256StarStar {
 public:
  // Seeds the four state words from SplitMix64(seed), per the authors'
  // recommended seeding procedure.
  explicit Xoshiro256StarStar(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& word : state_) word = sm.next();
  }

  // Directly sets the state words (test vectors only).
  static Xoshiro256StarStar from_state(const std::array<std::uint64_t, 4>& s) {
    Xoshiro256StarStar rng(0);
    rng.state_ = s;
    return rng;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform bit from the top bit of one draw.
  int next_bit() { return static_cast<int>(next_u64() >> 63); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace eprsim

#endif  // EPRSIM_RNG_HPP_
