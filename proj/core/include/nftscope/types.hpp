// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nftscope {

/// 256-bit unsigned integer used for token ids, amounts and wei values.
using uint256 = boost::multiprecision::uint256_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed event log payload (bad padding, truncated data, bad ABI offsets).
class DecodeError : public Error {
 public:
  using Error::Error;
};

/// Malformed or missing input file content.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration (thresholds, conflicting sources, bad flags).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// RPC endpoint unreachable or persistently failing.
class NetworkError : public Error {
 public:
  using Error::Error;
};

/// 20-byte Ethereum account/contract address.
struct Address {
  std::array<std::uint8_t, 20> bytes{};

  auto operator<=>(const Address&) const = default;

  bool is_zero() const noexcept {
    for (auto b : bytes)
      if (b != 0) return false;
    return true;
  }

  std::string to_hex() const;                    // "0x" + 40 lowercase hex digits
  static Address from_hex(std::string_view s);   // throws InputError
};

inline constexpr Address kZeroAddress{};

/// 32-byte hash (transaction hash, event topic, keccak digest).
struct Hash32 {
  std::array<std::uint8_t, 32> bytes{};

  auto operator<=>(const Hash32&) const = default;

  std::string to_hex() const;
  static Hash32 from_hex(std::string_view s);

  /// Interprets the 32 bytes as a big-endian unsigned integer.
  uint256 to_uint256() const;
  static Hash32 from_uint256(const uint256& v);
};

/// Identity of a single NFT. Its series is the contract alone.
struct NftKey {
  Address contract;
  uint256 token_id;

  bool operator==(const NftKey& o) const { return contract == o.contract && token_id == o.token_id; }
  bool operator<(const NftKey& o) const {
    if (contract != o.contract) return contract < o.contract;
    return token_id < o.token_id;
  }
};

using SeriesKey = Address;

/// UTC calendar quarter.
struct Quarter {
  int year = 0;
  int q = 0;  // 1..4

  auto operator<=>(const Quarter&) const = default;
  std::string to_string() const;  // "2022Q1"
};

Quarter quarter_of(std::int64_t unix_ts);
/// First second of the given quarter (UTC).
std::int64_t quarter_start(const Quarter& q);
Quarter next_quarter(const Quarter& q);

// ---- hex helpers ----------------------------------------------------------

std::string to_hex(std::span<const std::uint8_t> data, bool with_prefix = true);
/// Strict hex decode; throws InputError on odd digit count or non-hex chars.
std::vector<std::uint8_t> from_hex(std::string_view s);

/// Ethereum JSON-RPC quantity encoding: minimal hex, "0x0" for zero.
std::string to_hex_quantity(std::uint64_t v);
std::uint64_t parse_hex_quantity(std::string_view s);

/// Parses a decimal (or 0x-prefixed hex) string into uint256; throws InputError.
uint256 parse_uint256(std::string_view s);

std::size_t hash_bytes(std::span<const std::uint8_t> data) noexcept;
std::size_t hash_uint256(const uint256& v) noexcept;

}  // namespace nftscope

template <>
struct std::hash<nftscope::Address> {
  std::size_t operator()(const nftscope::Address& a) const noexcept {
    return nftscope::hash_bytes(a.bytes);
  }
};

template <>
struct std::hash<nftscope::Hash32> {
  std::size_t operator()(const nftscope::Hash32& h) const noexcept {
    return nftscope::hash_bytes(h.bytes);
  }
};

template <>
struct std::hash<nftscope::NftKey> {
  std::size_t operator()(const nftscope::NftKey& k) const noexcept {
    std::size_t h = nftscope::hash_bytes(k.contract.bytes);
    return h ^ (nftscope::hash_uint256(k.token_id) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};
