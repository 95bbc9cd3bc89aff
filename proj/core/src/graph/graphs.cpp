// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#include "nftscope/graph/graphs.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <tuple>

namespace nftscope::graph {

std::uint32_t TransferGraph::intern(const Address& a) {
  auto [it, inserted] = ids_.try_emplace(a, static_cast<std::uint32_t>(nodes_.size()));
  if (inserted) nodes_.push_back(a);
  return it->second;
}

std::uint32_t TransferGraph::id_of(const Address& a) const {
  auto it = ids_.find(a);
  if (it == ids_.end()) throw InputError("unknown account: " + a.to_hex());
  return it->second;
}

void TransferGraph::add_edge(std::uint32_t from, std::uint32_t to, std::uint64_t weight) {
  weights_[edge_key(from, to)] += weight;
  total_weight_ += weight;
}

std::uint64_t TransferGraph::weight(std::uint32_t from, std::uint32_t to) const {
  auto it = weights_.find(edge_key(from, to));
  return it == weights_.end() ? 0 : it->second;
}

CreateGraph build_ncg(std::span<const TransferRecord> records) {
  CreateGraph g;
  for (const TransferRecord& r : records) {
    const NftKey key = r.nft();
    auto it = g.edges.find(key);
    if (r.is_mint()) {
      if (it == g.edges.end()) {
        g.edges.emplace(key, CreationEdge{r.to, r.timestamp, r.standard, false});
      } else if (it->second.synthetic) {
        // A real mint supersedes a provisional mid-life edge.
        it->second = CreationEdge{r.to, r.timestamp, r.standard, false};
      } else {
        ++g.duplicate_mints;  // first mint wins
      }
    } else if (it == g.edges.end()) {
      // First seen mid-life: the first-seen sender stands in as creator.
      g.edges.emplace(key, CreationEdge{r.from, r.timestamp, r.standard, true});
    }
  }
  return g;
}

TransferGraph build_ntg(std::span<const TransferRecord> records) {
  TransferGraph g;
  for (const TransferRecord& r : records) {
    const std::uint32_t from = g.intern(r.from);
    const std::uint32_t to = g.intern(r.to);
    g.add_edge(from, to);
    g.nft_index[r.nft()].push_back(TransferEvent{r.from, r.to, r.timestamp, r.tx_hash});
  }
  return g;
}

HoldGraph build_nhg(std::span<const TransferRecord> records) {
  struct Last {
    std::tuple<std::int64_t, std::uint64_t, std::uint64_t, std::uint32_t> key;
    HoldState state;
  };
  std::unordered_map<NftKey, Last> last;
  for (const TransferRecord& r : records) {
    auto order = r.order_key();
    auto [it, inserted] = last.try_emplace(r.nft(), Last{order, {r.to, r.timestamp, r.standard}});
    if (!inserted && order >= it->second.key)
      it->second = Last{order, {r.to, r.timestamp, r.standard}};
  }
  HoldGraph g;
  g.holders.reserve(last.size());
  for (auto& [key, entry] : last) g.holders.emplace(key, entry.state);
  return g;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot open for writing: " + path);
  return out;
}

}  // namespace

void write_ntg_csv(const std::string& path, const TransferGraph& g) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows(g.edges().begin(), g.edges().end());
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    const Address& af = g.node(static_cast<std::uint32_t>(a.first >> 32));
    const Address& bf = g.node(static_cast<std::uint32_t>(b.first >> 32));
    const Address& at = g.node(static_cast<std::uint32_t>(a.first & 0xffffffff));
    const Address& bt = g.node(static_cast<std::uint32_t>(b.first & 0xffffffff));
    return std::tie(af, at) < std::tie(bf, bt);
  });
  std::ofstream out = open_out(path);
  out << "from,to,weight\n";
  for (const auto& [key, w] : rows) {
    out << g.node(static_cast<std::uint32_t>(key >> 32)).to_hex() << ','
        << g.node(static_cast<std::uint32_t>(key & 0xffffffff)).to_hex() << ',' << w << '\n';
  }
  if (!out) throw InputError("write failed: " + path);
}

void write_ncg_csv(const std::string& path, const CreateGraph& g) {
  std::vector<std::pair<NftKey, CreationEdge>> rows(g.edges.begin(), g.edges.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ofstream out = open_out(path);
  out << "creator,contract,token_id,timestamp\n";
  for (const auto& [key, edge] : rows) {
    out << edge.creator.to_hex() << ',' << key.contract.to_hex() << ',' << key.token_id.str() << ','
        << edge.timestamp << '\n';
  }
  if (!out) throw InputError("write failed: " + path);
}

void write_nhg_csv(const std::string& path, const HoldGraph& g) {
  std::vector<std::pair<NftKey, HoldState>> rows(g.holders.begin(), g.holders.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ofstream out = open_out(path);
  out << "contract,token_id,holder,since\n";
  for (const auto& [key, state] : rows) {
    out << key.contract.to_hex() << ',' << key.token_id.str() << ',' << state.holder.to_hex() << ','
        << state.since << '\n';
  }
  if (!out) throw InputError("write failed: " + path);
}

TransferGraph load_ntg_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open for reading: " + path);
  TransferGraph g;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw InputError(path + ": empty file, header expected");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "from,to,weight") throw InputError(path + ":1: unexpected edge-list header");
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw InputError(path + ":" + std::to_string(line_no) + ": expected 3 fields");
    const Address from = Address::from_hex(std::string_view(line).substr(0, c1));
    const Address to = Address::from_hex(std::string_view(line).substr(c1 + 1, c2 - c1 - 1));
    std::uint64_t w = 0;
    const auto* begin = line.data() + c2 + 1;
    const auto* end = line.data() + line.size();
    const auto [ptr, ec] = std::from_chars(begin, end, w);
    if (ec != std::errc() || ptr != end || w == 0)
      throw InputError(path + ":" + std::to_string(line_no) + ": bad weight");
    g.add_edge(g.intern(from), g.intern(to), w);
  }
  return g;
}

}  // namespace nftscope::graph
