// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polygraph {

struct Digest128 {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  friend constexpr auto operator<=>(const Digest128&, const Digest128&) = default;

  std::string hex() const;
};

struct Digest128Hash {
  std::size_t operator()(const Digest128& d) const noexcept {
    return static_cast<std::size_t>(d.lo ^ (d.hi * 0x9e3779b97f4a7c15ULL));
  }
};

// MurmurHash3 x64/128 over an explicitly serialized little-endian byte stream.
class Hasher128 {
 public:
  static constexpr std::uint64_t kDefaultSeed = 0x5eed'c0de'2024'0001ULL;

  explicit Hasher128(std::uint64_t seed = kDefaultSeed) : seed_(seed) {}

  Hasher128& add_bytes(std::span<const std::uint8_t> bytes);
  Hasher128& add_u64(std::uint64_t value);
  Hasher128& add_i64(std::int64_t value) { return add_u64(static_cast<std::uint64_t>(value)); }
  Hasher128& add_digest(const Digest128& d) { return add_u64(d.hi).add_u64(d.lo); }
  Hasher128& add_string(std::string_view s);

  Digest128 finish() const;

 private:
  std::uint64_t seed_;
  std::vector<std::uint8_t> buffer_;
};

Digest128 murmur3_x64_128(std::span<const std::uint8_t> bytes, std::uint64_t seed);

}  // namespace polygraph
