// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "nftscope/graph/graphs.hpp"
#include "nftscope/ingest/io.hpp"
#include "nftscope/ingest/transfer.hpp"

namespace nftscope::indicators {

using ingest::Category;
using ingest::TransferRecord;

/// Per-NFT value state derived from the tx-value join. An NFT's price is
/// the credited value of its latest value-bearing transfer; volume is the
/// sum of credited values over its whole history. priced == false means no
/// transfer of the NFT ever carried value.
struct NftValue {
  uint256 volume = 0;
  uint256 price = 0;
  bool priced = false;
};

/// Result of joining transfers with transaction values. Transactions that
/// move k NFTs split their value equally (floor division, remainder to the
/// transaction's first record) so that credited values sum exactly back to
/// the transaction value.
struct PriceModel {
  std::unordered_map<NftKey, NftValue> per_nft;
  /// Credited wei per record, aligned with the record span given to
  /// attach_values.
  std::vector<uint256> credited;
};

PriceModel attach_values(std::span<const TransferRecord> records,
                         const std::unordered_map<Hash32, uint256>& tx_values);

struct SeriesIndicators {
  SeriesKey series;
  std::uint64_t nft_count = 0;
  std::uint64_t transfer_count = 0;  // non-mint transfers
  double turnover = 0;
  std::optional<uint256> floor_price;
  std::optional<uint256> highest_price;
  std::optional<double> hfratio;
};

struct NftIndicators {
  NftKey nft;
  std::uint64_t n = 0;       // all records of the NFT, mints included
  double p_value = 0;        // seconds per transfer; 0 for a single record
  std::optional<double> fratio;
  uint256 volume = 0;
  std::uint32_t transferors = 0;
};

/// Non-mint transfers of the series divided by its distinct NFT count,
/// over the full history. Throws InputError when the series has no NFTs.
double turnover(const SeriesKey& series, std::span<const TransferRecord> records);

/// Average transfer interval |T_last - T_first| / N over the NFT's records.
/// Throws InputError when the NFT has no records.
double p_value(const NftKey& nft, std::span<const TransferRecord> records);

struct SeriesPrices {
  std::optional<uint256> floor;
  std::optional<uint256> highest;
};

/// Min/max price over the priced NFTs of the series; both unset when no NFT
/// of the series is priced.
SeriesPrices series_prices(const SeriesKey& series, const PriceModel& model);

/// price(nft) / floor; nullopt when the NFT is unpriced or the floor is
/// missing or zero.
std::optional<double> fratio(const NftKey& nft, const PriceModel& model,
                             const std::optional<uint256>& series_floor);

SeriesIndicators series_indicators(const SeriesKey& series,
                                   std::span<const TransferRecord> records,
                                   const PriceModel& model);

NftIndicators nft_indicators(const NftKey& nft, std::span<const TransferRecord> records,
                             const PriceModel& model, const graph::TransferGraph& ntg);

struct IndicatorTables {
  std::vector<SeriesIndicators> series;  // sorted by contract
  std::vector<NftIndicators> nfts;       // sorted by (contract, token_id)
};

/// Single-pass indicator computation for every series and NFT in the
/// stream. Equals the per-entity operations applied one by one.
IndicatorTables compute_indicator_tables(std::span<const TransferRecord> records,
                                         const PriceModel& model,
                                         const graph::TransferGraph& ntg);

struct QuarterlyVolume {
  Quarter quarter;
  std::optional<Category> category;  // nullopt = unlabeled
  uint256 volume = 0;
};

/// Per UTC quarter and category, the sum of credited transfer values.
/// Zero-volume rows are suppressed.
std::vector<QuarterlyVolume> quarterly_volume(
    std::span<const TransferRecord> records, const PriceModel& model,
    const std::unordered_map<Address, Category>& labels);

// Report CSVs; wei columns are exact decimal strings, undefined ratio and
// price fields are left empty.
void write_series_indicators_csv(const std::string& path,
                                 std::span<const SeriesIndicators> rows);
void write_nft_indicators_csv(const std::string& path, std::span<const NftIndicators> rows);
void write_quarterly_volume_csv(const std::string& path, std::span<const QuarterlyVolume> rows);

}  // namespace nftscope::indicators
