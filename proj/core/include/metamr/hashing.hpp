#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "metamr/model.hpp"

namespace metamr {

/// Seeded digest configuration. family_round counts how many rehashes this
/// config is away from the job's initial one; rehash() derives a fresh seed
/// from (seed, family_round + 1), so retries are deterministic.
struct HashConfig {
  std::uint64_t seed = 0;
  std::uint32_t output_bits = 64;
  std::uint32_t family_round = 0;

  friend bool operator==(const HashConfig&, const HashConfig&) = default;
};

/// Digest width that maps m distinct keys into m^3 slots: ceil(3 * log2(max(m, 2))).
/// Computed in integer arithmetic as bit_width(m^3 - 1). Capped at 64 bits.
std::uint32_t required_digest_bits(std::uint64_t m);

/// Deterministic 64-bit mix of (cfg.seed, bytes), truncated to cfg.output_bits.
std::uint64_t digest64(std::string_view bytes, const HashConfig& cfg);

std::uint64_t digest64(const AttributeValue& v, const HashConfig& cfg);

/// Bit string of the digest, exactly cfg.output_bits long, as '0'/'1' text.
/// Used only for display; the engine compares the integer form.
std::string digest_bit_string(std::uint64_t digest, const HashConfig& cfg);

/// Next member of the hash family: same width, family_round + 1, fresh seed.
HashConfig rehash(const HashConfig& cfg);

}  // namespace metamr
