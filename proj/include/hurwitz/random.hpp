#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Default seed for every randomized check. HURWITZ_GA_SEED overrides it in
// the CLI; an explicit --seed overrides both.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// Mixes a base seed with a case tag so independent cases draw independent
// streams regardless of execution order.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag);
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag);

// Numerators uniform in [-9, 9], denominators uniform in {1, 2, 3}.
// Only raw mt19937_64 output is used, so streams are identical on every
// standard library.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  Rational next();

  template <std::size_t N>
  std::array<Rational, N> next_array() {
    std::array<Rational, N> out;
    for (auto& v : out) v = next();
    return out;
  }

  std::vector<Rational> next_vector(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace hurwitz
