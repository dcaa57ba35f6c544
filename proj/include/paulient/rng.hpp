// Copyright 2026 The paulient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace paulient {

/// A seeded random stream. Operations that draw randomness take one of these
/// explicitly; concurrent workers each get their own via `split`.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(make_engine(seed, 0)) {}

  std::uint64_t seed() const { return seed_; }

  /// Independent child stream, deterministic in (seed, index).
  RngStream split(std::uint64_t index) const { return RngStream(seed_, index + 1); }

  std::uint64_t next_u64() { return engine_(); }
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_); }
  bool coin() { return (engine_() >> 63) != 0; }

  std::mt19937_64& engine() { return engine_; }

 private:
  RngStream(std::uint64_t seed, std::uint64_t index) : seed_(seed), engine_(make_engine(seed, index)) {}

  static std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace paulient
