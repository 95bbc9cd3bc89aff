// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "nftscope/types.hpp"

namespace nftscope::ingest {

/// One raw Ethereum event log, as returned by eth_getLogs plus the block
/// timestamp the fetcher attaches. topics[0] is the event signature hash;
/// (tx_hash, log_index) is unique within a dataset.
struct RawLogEvent {
  Address contract_address;
  std::vector<Hash32> topics;  // 1..4 entries
  std::vector<std::uint8_t> data;
  std::uint64_t block_number = 0;
  std::int64_t timestamp = 0;  // unix seconds, UTC
  Hash32 tx_hash;
  std::uint64_t log_index = 0;
};

}  // namespace nftscope::ingest
