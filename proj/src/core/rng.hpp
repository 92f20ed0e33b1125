// Copyright 2026 The cscbench Authors.
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

#ifndef CSCBENCH_CORE_RNG_HPP_
#define CSCBENCH_CORE_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace cscbench {

// SplitMix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// 64-bit FNV-1a over raw bytes.
constexpr std::uint64_t Fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Seed of the substream owned by `label` (a sentence id, dataset name, ...):
//   Mix64(Mix64(master) ^ Fnv1a64(label)).
// Every consumer of randomness derives its stream through this function, so
// results never depend on processing order.
constexpr std::uint64_t SubstreamSeed(std::uint64_t master, std::string_view label) noexcept {
  return Mix64(Mix64(master) ^ Fnv1a64(label));
}

// Deterministic generator. The engine output is fixed by the C++ standard;
// all derived draws are implemented here rather than with <random>
// distributions, whose algorithms vary across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double Uniform01() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  bool Bernoulli(double p) { return Uniform01() < p; }

  // Uniform in [0, n); n must be positive. Rejection sampling, unbiased.
  std::uint64_t Below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r = Next();
    while (r >= limit) r = Next();
    return r % n;
  }

  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(Below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct indices from [0, n), returned in ascending order.
  std::vector<std::size_t> SampleIndices(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace cscbench

#endif  // CSCBENCH_CORE_RNG_HPP_
