// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "nftscope/ingest/log_event.hpp"

namespace nftscope::ingest {

struct RpcOptions {
  std::uint32_t max_retries = 5;  // transport-level retries per request
  std::chrono::milliseconds initial_backoff{200};
  std::chrono::milliseconds max_backoff{2000};
  std::uint32_t jobs = 1;  // concurrent block windows in flight
};

/// Fetches NFT transfer logs over [from_block, to_block] via eth_getLogs in
/// windows of `chunk` blocks, topic-filtered to the three transfer event
/// signatures. Block timestamps are resolved through eth_getBlockByNumber
/// with a per-run cache and attached to each event. Provider "response too
/// large" rejections halve the window down to a single block before giving
/// up; transport failures retry with capped exponential backoff.
///
/// Output is ordered by (block_number, log_index) regardless of the number
/// of concurrent windows.
///
/// Throws ConfigError if from_block > to_block or chunk == 0, and
/// NetworkError once retries/halving are exhausted.
std::vector<RawLogEvent> fetch_logs_rpc(const std::string& endpoint, std::uint64_t from_block,
                                        std::uint64_t to_block, std::uint64_t chunk,
                                        const RpcOptions& options = {});

}  // namespace nftscope::ingest
