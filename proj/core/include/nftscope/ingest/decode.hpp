// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nftscope/ingest/log_event.hpp"
#include "nftscope/ingest/transfer.hpp"

namespace nftscope::ingest {

/// Signature hashes of the three NFT transfer events, computed from the
/// canonical signature strings at first use (never transcribed constants).
struct EventSignatures {
  Hash32 erc721_transfer;   // Transfer(address,address,uint256)
  Hash32 erc1155_single;    // TransferSingle(address,address,address,uint256,uint256)
  Hash32 erc1155_batch;     // TransferBatch(address,address,address,uint256[],uint256[])
};

const EventSignatures& event_signatures();

/// Decodes an ERC721 Transfer log. Returns nullopt for non-matching logs;
/// the 4-topic requirement (from, to, tokenId all indexed) is what separates
/// ERC721 from the 3-topic ERC20 Transfer shape.
/// Throws DecodeError on malformed address padding.
std::optional<TransferRecord> decode_erc721_transfer(const RawLogEvent& ev);

/// Decodes an ERC1155 TransferSingle log (token id and amount live in data).
/// Throws DecodeError if data is shorter than 64 bytes.
std::optional<TransferRecord> decode_erc1155_single(const RawLogEvent& ev);

/// Decodes an ERC1155 TransferBatch log into one record per (id, value)
/// pair, batch_pos carrying the array position. Returns an empty vector for
/// non-matching logs (and for matching empty batches).
/// Throws DecodeError on unequal array lengths or out-of-bounds ABI offsets.
std::vector<TransferRecord> decode_erc1155_batch(const RawLogEvent& ev);

struct ParseStats {
  std::uint64_t decoded = 0;
  std::uint64_t dropped_non_nft = 0;  // logs whose topic0 matches no NFT signature
  std::uint64_t malformed = 0;        // matching signature but undecodable (lenient mode)
};

struct ParseResult {
  std::vector<TransferRecord> records;
  ParseStats stats;
};

/// Runs the three decoders over an ordered log stream. Lenient mode (the
/// default) counts and skips malformed logs; strict mode rethrows the first
/// DecodeError.
ParseResult parse_log_stream(std::span<const RawLogEvent> events, bool strict = false);

}  // namespace nftscope::ingest
