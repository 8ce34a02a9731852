#include "hurwitz/random.hpp"

namespace hurwitz {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
  return splitmix64(splitmix64(base) ^ tag);
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
  // FNV-1a over the tag
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return derive_seed(base, h);
}

Rational RationalSampler::next() {
  const long num = static_cast<long>(engine_() % 19) - 9;
  const long den = static_cast<long>(engine_() % 3) + 1;
  return make_rational(num, den);
}

std::vector<Rational> RationalSampler::next_vector(std::size_t n) {
  std::vector<Rational> out(n);
  for (auto& v : out) v = next();
  return out;
}

}  // namespace hurwitz
