#include "dwtsteg/keyed_pn.hpp"

#include <string>

#include "dwtsteg/error.hpp"

namespace dwtsteg {
namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

SessionKey::SessionKey(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {
  if (bytes_.empty()) throw InvalidArgument("session key must not be empty");
}

SessionKey SessionKey::from_text(std::string_view text) {
  return SessionKey(std::vector<std::uint8_t>(text.begin(), text.end()));
}

SessionKey SessionKey::from_hex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.size() % 2 != 0) throw InvalidArgument("hex key needs an even number of digits");
  std::vector<std::uint8_t> bytes;
  bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = hex_digit(hex[i]), lo = hex_digit(hex[i + 1]);
    if (hi < 0 || lo < 0) throw InvalidArgument("invalid hex digit in key");
    bytes.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
  }
  return SessionKey(std::move(bytes));
}

std::uint64_t fnv1a64(std::span<const std::uint8_t> data, std::uint64_t h) {
  for (std::uint8_t b : data) {
    h ^= b;
    h *= kFnvPrime;
  }
  return h;
}

std::uint64_t derive_seed(const SessionKey& key, Subband domain) {
  const std::uint8_t tag = static_cast<std::uint8_t>(domain);
  return fnv1a64(std::span(&tag, 1), fnv1a64(key.bytes()));
}

PnStream::PnStream(const SessionKey& key, Subband domain)
    : rng_(derive_seed(key, domain)), domain_(domain) {}

void PnStream::fill_next(std::span<std::int8_t> out) {
  for (std::int8_t& v : out) v = (rng_.next() >> 63) ? 1 : -1;
}

PnSequence PnStream::next_matrix(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) throw InvalidArgument("PN matrix dimensions must be positive");
  PnSequence seq{width, height, std::vector<std::int8_t>(width * height)};
  fill_next(seq.values);
  return seq;
}

}  // namespace dwtsteg
