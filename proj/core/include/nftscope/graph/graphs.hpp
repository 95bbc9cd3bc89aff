// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "nftscope/ingest/transfer.hpp"
#include "nftscope/types.hpp"

namespace nftscope::graph {

using ingest::Standard;
using ingest::TransferRecord;

/// One creation edge of the create graph: creator -> NFT at time t.
/// `synthetic` marks NFTs first seen mid-life (no mint in the dataset),
/// whose creator is inferred as the first-seen sender.
struct CreationEdge {
  Address creator;
  std::int64_t timestamp = 0;
  Standard standard = Standard::ERC721;
  bool synthetic = false;
};

/// Bipartite creator->NFT graph; exactly one edge per NFT, so the edge
/// count equals the distinct NFT count.
struct CreateGraph {
  std::unordered_map<NftKey, CreationEdge> edges;
  std::uint64_t duplicate_mints = 0;

  std::uint64_t edge_count() const { return edges.size(); }
};

/// One entry of an NFT's transfer history, in stream order.
struct TransferEvent {
  Address from;
  Address to;
  std::int64_t timestamp = 0;
  Hash32 tx_hash;
};

/// Weighted directed account graph. Edge weight is the number of transfers
/// from -> to (mints and burns included, so the zero address is a node).
/// Also carries the per-NFT ordered transfer index used by the per-NFT
/// activity metrics.
class TransferGraph {
 public:
  std::uint32_t intern(const Address& a);
  /// Node id or throws InputError when the address is unknown.
  std::uint32_t id_of(const Address& a) const;
  bool has_node(const Address& a) const { return ids_.contains(a); }

  void add_edge(std::uint32_t from, std::uint32_t to, std::uint64_t weight = 1);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return weights_.size(); }
  std::uint64_t total_weight() const { return total_weight_; }

  const std::vector<Address>& nodes() const { return nodes_; }
  const Address& node(std::uint32_t id) const { return nodes_[id]; }

  /// Edge map keyed by (from << 32 | to).
  const std::unordered_map<std::uint64_t, std::uint64_t>& edges() const { return weights_; }
  static std::uint64_t edge_key(std::uint32_t from, std::uint32_t to) {
    return (static_cast<std::uint64_t>(from) << 32) | to;
  }
  std::uint64_t weight(std::uint32_t from, std::uint32_t to) const;

  std::unordered_map<NftKey, std::vector<TransferEvent>> nft_index;

 private:
  std::vector<Address> nodes_;
  std::unordered_map<Address, std::uint32_t> ids_;
  std::unordered_map<std::uint64_t, std::uint64_t> weights_;
  std::uint64_t total_weight_ = 0;
};

/// Latest holder per NFT (recipient of its last record; equal-timestamp
/// ties broken by block, log index, batch position).
struct HoldState {
  Address holder;
  std::int64_t since = 0;
  Standard standard = Standard::ERC721;
};

struct HoldGraph {
  std::unordered_map<NftKey, HoldState> holders;

  std::uint64_t edge_count() const { return holders.size(); }
};

CreateGraph build_ncg(std::span<const TransferRecord> records);
TransferGraph build_ntg(std::span<const TransferRecord> records);
HoldGraph build_nhg(std::span<const TransferRecord> records);

// Edge-list exports (from,to,weight / creator,contract,token_id,timestamp /
// contract,token_id,holder,since), rows sorted for reproducible output.
void write_ntg_csv(const std::string& path, const TransferGraph& g);
void write_ncg_csv(const std::string& path, const CreateGraph& g);
void write_nhg_csv(const std::string& path, const HoldGraph& g);

/// Loads a from,to,weight edge list as a TransferGraph (no NFT index).
TransferGraph load_ntg_csv(const std::string& path);

}  // namespace nftscope::graph
