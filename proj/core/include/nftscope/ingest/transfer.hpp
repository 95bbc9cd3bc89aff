// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>
#include <tuple>

#include "nftscope/types.hpp"

namespace nftscope::ingest {

enum class Standard : std::uint8_t { ERC721, ERC1155 };

std::string_view to_string(Standard s);
Standard standard_from_string(std::string_view s);  // throws InputError

/// One decoded NFT movement. from == zero address means mint, to == zero
/// address means burn. (tx_hash, log_index, batch_pos) is unique;
/// amount is always 1 for ERC721.
struct TransferRecord {
  Standard standard = Standard::ERC721;
  Address from;
  Address to;
  Address contract;
  uint256 token_id;
  uint256 amount = 1;
  std::uint64_t block_number = 0;
  std::int64_t timestamp = 0;
  Hash32 tx_hash;
  std::uint64_t log_index = 0;
  std::uint32_t batch_pos = 0;

  bool is_mint() const noexcept { return from.is_zero(); }
  bool is_burn() const noexcept { return to.is_zero(); }
  NftKey nft() const { return NftKey{contract, token_id}; }

  /// Canonical stream order: timestamp, then chain position.
  auto order_key() const {
    return std::tuple(timestamp, block_number, log_index, batch_pos);
  }
};

}  // namespace nftscope::ingest
