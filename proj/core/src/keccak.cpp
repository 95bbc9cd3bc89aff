// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#include "nftscope/keccak.hpp"

#include <bit>
#include <cstring>

namespace nftscope {

namespace {

constexpr std::uint64_t kRoundConstants[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL, 0x8000000080008000ULL,
    0x000000000000808bULL, 0x0000000080000001ULL, 0x8000000080008081ULL, 0x8000000000008009ULL,
    0x000000000000008aULL, 0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL, 0x8000000000008003ULL,
    0x8000000000008002ULL, 0x8000000000000080ULL, 0x000000000000800aULL, 0x800000008000000aULL,
    0x8000000080008081ULL, 0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

// Rotation offsets indexed [x][y].
constexpr int kRotation[5][5] = {
    {0, 36, 3, 41, 18},
    {1, 44, 10, 45, 2},
    {62, 6, 43, 15, 61},
    {28, 55, 25, 21, 56},
    {27, 20, 39, 8, 14},
};

void keccak_f1600(std::uint64_t state[5][5]) {
  for (int round = 0; round < 24; ++round) {
    // theta
    std::uint64_t c[5];
    for (int x = 0; x < 5; ++x)
      c[x] = state[x][0] ^ state[x][1] ^ state[x][2] ^ state[x][3] ^ state[x][4];
    for (int x = 0; x < 5; ++x) {
      const std::uint64_t d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
      for (int y = 0; y < 5; ++y) state[x][y] ^= d;
    }
    // rho + pi
    std::uint64_t b[5][5];
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y)
        b[y][(2 * x + 3 * y) % 5] = std::rotl(state[x][y], kRotation[x][y]);
    // chi
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y)
        state[x][y] = b[x][y] ^ (~b[(x + 1) % 5][y] & b[(x + 2) % 5][y]);
    // iota
    state[0][0] ^= kRoundConstants[round];
  }
}

}  // namespace

Hash32 keccak256(std::span<const std::uint8_t> data) {
  constexpr std::size_t kRate = 136;  // 1088-bit rate for 256-bit output
  std::uint64_t state[5][5] = {};

  std::size_t offset = 0;
  std::uint8_t block[kRate];
  while (true) {
    const std::size_t remaining = data.size() - offset;
    if (remaining >= kRate) {
      std::memcpy(block, data.data() + offset, kRate);
      offset += kRate;
    } else {
      std::memcpy(block, data.data() + offset, remaining);
      std::memset(block + remaining, 0, kRate - remaining);
      block[remaining] ^= 0x01;
      block[kRate - 1] ^= 0x80;
    }
    for (std::size_t i = 0; i < kRate / 8; ++i) {
      std::uint64_t lane;
      std::memcpy(&lane, block + i * 8, 8);  // little-endian host assumed
      state[i % 5][i / 5] ^= lane;
    }
    keccak_f1600(state);
    if (remaining < kRate) break;
  }

  Hash32 out;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::uint64_t lane = state[i % 5][i / 5];
    std::memcpy(out.bytes.data() + i * 8, &lane, 8);
  }
  return out;
}

Hash32 keccak256(std::string_view data) {
  return keccak256(std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

}  // namespace nftscope
