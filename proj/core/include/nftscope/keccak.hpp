// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string_view>

#include "nftscope/types.hpp"

namespace nftscope {

/// Keccak-256 with the original 0x01 multi-rate padding (the Ethereum
/// variant, not NIST SHA3-256).
Hash32 keccak256(std::span<const std::uint8_t> data);
Hash32 keccak256(std::string_view data);

}  // namespace nftscope
