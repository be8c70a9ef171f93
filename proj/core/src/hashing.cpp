#include "metamr/hashing.hpp"

#include <bit>

namespace metamr {

namespace {

// splitmix64 finalizer; stable across platforms.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint32_t required_digest_bits(std::uint64_t m) {
  if (m < 2) m = 2;
  unsigned __int128 cube = static_cast<unsigned __int128>(m) * m * m;
  std::uint32_t bits = 0;
  unsigned __int128 top = cube - 1;
  while (top > 0) {
    ++bits;
    top >>= 1;
  }
  return bits > 64 ? 64 : bits;
}

std::uint64_t digest64(std::string_view bytes, const HashConfig& cfg) {
  std::uint64_t h = mix64(cfg.seed);
  for (unsigned char c : bytes) {
    h = mix64(h ^ c);
  }
  h = mix64(h ^ bytes.size());
  if (cfg.output_bits >= 64) return h;
  return h & ((1ull << cfg.output_bits) - 1);
}

std::uint64_t digest64(const AttributeValue& v, const HashConfig& cfg) {
  return digest64(std::string_view(v.payload), cfg);
}

std::string digest_bit_string(std::uint64_t digest, const HashConfig& cfg) {
  std::string s(cfg.output_bits, '0');
  for (std::uint32_t i = 0; i < cfg.output_bits; ++i) {
    if (digest >> (cfg.output_bits - 1 - i) & 1) s[i] = '1';
  }
  return s;
}

HashConfig rehash(const HashConfig& cfg) {
  HashConfig next = cfg;
  next.family_round = cfg.family_round + 1;
  next.seed = mix64(cfg.seed ^ mix64(static_cast<std::uint64_t>(cfg.family_round) + 1));
  return next;
}

}  // namespace metamr
