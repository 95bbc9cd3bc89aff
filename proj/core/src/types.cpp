// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#include "nftscope/types.hpp"

#include <charconv>

namespace nftscope {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string_view strip_0x(std::string_view s) {
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  return s;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> data, bool with_prefix) {
  std::string out;
  out.reserve(data.size() * 2 + 2);
  if (with_prefix) out += "0x";
  for (auto b : data) {
    out += kHexDigits[b >> 4];
    out += kHexDigits[b & 0xf];
  }
  return out;
}

std::vector<std::uint8_t> from_hex(std::string_view s) {
  s = strip_0x(s);
  if (s.size() % 2 != 0) throw InputError("hex string has odd digit count: " + std::string(s));
  std::vector<std::uint8_t> out(s.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = hex_nibble(s[2 * i]);
    int lo = hex_nibble(s[2 * i + 1]);
    if (hi < 0 || lo < 0) throw InputError("invalid hex digit in: " + std::string(s));
    out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return out;
}

std::string to_hex_quantity(std::uint64_t v) {
  char buf[18];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, 16);
  return "0x" + std::string(buf, end);
}

std::uint64_t parse_hex_quantity(std::string_view s) {
  std::string_view digits = strip_0x(s);
  if (digits.empty() || digits.size() > 16) throw InputError("bad hex quantity: " + std::string(s));
  std::uint64_t v = 0;
  for (char c : digits) {
    int n = hex_nibble(c);
    if (n < 0) throw InputError("bad hex quantity: " + std::string(s));
    v = v << 4 | static_cast<std::uint64_t>(n);
  }
  return v;
}

uint256 parse_uint256(std::string_view s) {
  if (s.empty()) throw InputError("empty integer field");
  try {
    return uint256(std::string(s));
  } catch (const std::exception&) {
    throw InputError("bad integer field: " + std::string(s));
  }
}

std::string Address::to_hex() const { return nftscope::to_hex(bytes); }

Address Address::from_hex(std::string_view s) {
  auto raw = nftscope::from_hex(s);
  if (raw.size() != 20) throw InputError("address must be 20 bytes: " + std::string(s));
  Address a;
  std::copy(raw.begin(), raw.end(), a.bytes.begin());
  return a;
}

std::string Hash32::to_hex() const { return nftscope::to_hex(bytes); }

Hash32 Hash32::from_hex(std::string_view s) {
  auto raw = nftscope::from_hex(s);
  if (raw.size() != 32) throw InputError("hash must be 32 bytes: " + std::string(s));
  Hash32 h;
  std::copy(raw.begin(), raw.end(), h.bytes.begin());
  return h;
}

uint256 Hash32::to_uint256() const {
  uint256 v = 0;
  for (auto b : bytes) v = (v << 8) | b;
  return v;
}

Hash32 Hash32::from_uint256(const uint256& v) {
  Hash32 h;
  uint256 x = v;
  for (int i = 31; i >= 0; --i) {
    h.bytes[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x & 0xff);
    x >>= 8;
  }
  return h;
}

// Days-from-civil / civil-from-days (Howard Hinnant's algorithms) via
// std::chrono would also work; kept explicit so negative timestamps floor
// correctly without chrono edge cases.
namespace {

struct CivilDate {
  int year;
  unsigned month;
  unsigned day;
};

CivilDate civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp < 10 ? mp + 3 : mp - 9;
  return {static_cast<int>(y + (m <= 2)), m, d};
}

std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m > 2 ? m - 3 : m + 9) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Quarter quarter_of(std::int64_t unix_ts) {
  const CivilDate cd = civil_from_days(floor_div(unix_ts, 86400));
  return Quarter{cd.year, static_cast<int>((cd.month - 1) / 3) + 1};
}

std::int64_t quarter_start(const Quarter& q) {
  const unsigned month = static_cast<unsigned>((q.q - 1) * 3 + 1);
  return days_from_civil(q.year, month, 1) * 86400;
}

Quarter next_quarter(const Quarter& q) {
  return q.q == 4 ? Quarter{q.year + 1, 1} : Quarter{q.year, q.q + 1};
}

std::string Quarter::to_string() const {
  return std::to_string(year) + "Q" + std::to_string(q);
}

std::size_t hash_bytes(std::span<const std::uint8_t> data) noexcept {
  // FNV-1a
  std::size_t h = 14695981039346656037ULL;
  for (auto b : data) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

std::size_t hash_uint256(const uint256& v) noexcept {
  const auto& backend = v.backend();
  std::size_t h = 14695981039346656037ULL;
  for (unsigned i = 0; i < backend.size(); ++i) {
    auto limb = static_cast<std::uint64_t>(backend.limbs()[i]);
    h ^= limb;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace nftscope
