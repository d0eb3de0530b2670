#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace dwtsteg {

/// Subbands that carry a message. The value is the domain-separation byte
/// appended to the key before hashing.
enum class Subband : std::uint8_t { HL = 0x01, HH = 0x02 };

/// Shared secret that seeds PN generation. Never empty.
class SessionKey {
 public:
  explicit SessionKey(std::vector<std::uint8_t> bytes);
  static SessionKey from_text(std::string_view text);
  /// Accepts an even number of hex digits, optionally prefixed with "0x".
  static SessionKey from_hex(std::string_view hex);

  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
  friend bool operator==(const SessionKey&, const SessionKey&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

inline constexpr std::uint64_t kFnvOffsetBasis = 14695981039346656037ULL;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv1a64(std::span<const std::uint8_t> data, std::uint64_t h = kFnvOffsetBasis);

/// FNV-1a-64 over key bytes followed by the subband's domain byte.
std::uint64_t derive_seed(const SessionKey& key, Subband domain);

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

/// A ±1 matrix matching one subband.
struct PnSequence {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::int8_t> values;
};

/// Ordered source of per-bit PN matrices for one (key, subband) pair. Move
/// it between threads if needed; never share it.
class PnStream {
 public:
  PnStream(const SessionKey& key, Subband domain);
  /// Stream starting from a raw generator state (test vectors, tooling).
  PnStream(std::uint64_t state, Subband domain) : rng_(state), domain_(domain) {}

  /// Draws width*height outputs in row-major order; entry is +1 when the
  /// output's top bit is set, -1 otherwise. Throws InvalidArgument on a zero
  /// dimension.
  PnSequence next_matrix(std::size_t width, std::size_t height);
  /// Same draw into caller storage; out.size() entries are consumed.
  void fill_next(std::span<std::int8_t> out);

  Subband domain() const noexcept { return domain_; }
  std::uint64_t state() const noexcept { return rng_.state(); }

 private:
  SplitMix64 rng_;
  Subband domain_;
};

}  // namespace dwtsteg
