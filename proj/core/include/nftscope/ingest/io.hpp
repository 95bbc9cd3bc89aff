// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nftscope/ingest/log_event.hpp"
#include "nftscope/ingest/transfer.hpp"

namespace nftscope::ingest {

/// Native-currency value attached to a transaction; the price source for all
/// value indicators. One record per tx_hash.
struct TxValueRecord {
  Hash32 tx_hash;
  uint256 value_wei;
};

enum class Category : std::uint8_t {
  art,
  collectibles,
  ens,
  music,
  sports,
  gaming,
  decentraland,
};

std::string_view to_string(Category c);
Category category_from_string(std::string_view s);  // throws InputError

struct CategoryLabel {
  Address contract;
  Category category;
};

struct DescriptiveText {
  Address contract;
  std::string name;
  std::string description;
};

// Exact header: standard,from,to,contract,token_id,amount,block_number,
// timestamp,tx_hash,log_index,batch_pos. Addresses and hashes are lowercase
// 0x-hex; token_id and amount are decimal.
void write_transfers_csv(const std::string& path, std::span<const TransferRecord> records);

struct TransfersLoad {
  std::vector<TransferRecord> records;
  std::uint64_t skipped = 0;  // malformed rows skipped in lenient mode
};
TransfersLoad load_transfers_csv(const std::string& path, bool strict = false);

void write_tx_values_csv(const std::string& path, std::span<const TxValueRecord> values);

struct TxValuesLoad {
  std::unordered_map<Hash32, uint256> values;
  std::uint64_t warnings = 0;  // duplicate tx_hash rows (last wins) + skipped rows
};
TxValuesLoad load_tx_values(const std::string& path, bool strict = false);

void write_category_labels(const std::string& path, std::span<const CategoryLabel> labels);

struct LabelsLoad {
  std::unordered_map<Address, Category> labels;
  std::uint64_t warnings = 0;  // duplicate contract rows (last wins) + skipped rows
};
LabelsLoad load_category_labels(const std::string& path, bool strict = false);

void write_descriptive_texts(const std::string& path, std::span<const DescriptiveText> texts);

struct TextsLoad {
  std::vector<DescriptiveText> texts;
  std::uint64_t warnings = 0;
};
TextsLoad load_descriptive_texts(const std::string& path, bool strict = false);

// Raw logs as JSONL, one object per line with the eth_getLogs keys
// (address, topics, data, blockNumber, transactionHash, logIndex; quantities
// hex-encoded) plus the timestamp the fetcher attaches.
void write_raw_logs_jsonl(const std::string& path, std::span<const RawLogEvent> events);

struct RawLogsLoad {
  std::vector<RawLogEvent> events;
  std::uint64_t skipped = 0;
};
RawLogsLoad load_raw_logs_jsonl(const std::string& path, bool strict = false);

// Wash-trade label list: CSV with header contract,token_id.
void write_nft_keys_csv(const std::string& path, std::span<const NftKey> keys);
std::vector<NftKey> load_nft_keys_csv(const std::string& path);

}  // namespace nftscope::ingest
