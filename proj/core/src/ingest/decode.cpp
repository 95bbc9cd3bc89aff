// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#include "nftscope/ingest/decode.hpp"

#include <algorithm>

#include "nftscope/keccak.hpp"

namespace nftscope::ingest {

std::string_view to_string(Standard s) {
  return s == Standard::ERC721 ? "ERC721" : "ERC1155";
}

Standard standard_from_string(std::string_view s) {
  if (s == "ERC721") return Standard::ERC721;
  if (s == "ERC1155") return Standard::ERC1155;
  throw InputError("unknown token standard: " + std::string(s));
}

const EventSignatures& event_signatures() {
  static const EventSignatures sigs{
      keccak256("Transfer(address,address,uint256)"),
      keccak256("TransferSingle(address,address,address,uint256,uint256)"),
      keccak256("TransferBatch(address,address,address,uint256[],uint256[])"),
  };
  return sigs;
}

namespace {

// An address topic is a 32-byte word with the address in the low 20 bytes;
// nonzero high bytes mean the log does not follow the standard's layout.
Address address_from_topic(const Hash32& topic, const char* field) {
  for (std::size_t i = 0; i < 12; ++i) {
    if (topic.bytes[i] != 0)
      throw DecodeError(std::string("malformed address padding in field '") + field + "'");
  }
  Address a;
  std::copy(topic.bytes.begin() + 12, topic.bytes.end(), a.bytes.begin());
  return a;
}

uint256 word_at(std::span<const std::uint8_t> data, std::size_t offset) {
  uint256 v = 0;
  for (std::size_t i = 0; i < 32; ++i) v = (v << 8) | data[offset + i];
  return v;
}

TransferRecord base_record(const RawLogEvent& ev, Standard standard) {
  TransferRecord rec;
  rec.standard = standard;
  rec.contract = ev.contract_address;
  rec.block_number = ev.block_number;
  rec.timestamp = ev.timestamp;
  rec.tx_hash = ev.tx_hash;
  rec.log_index = ev.log_index;
  return rec;
}

}  // namespace

std::optional<TransferRecord> decode_erc721_transfer(const RawLogEvent& ev) {
  if (ev.topics.empty() || ev.topics[0] != event_signatures().erc721_transfer) return std::nullopt;
  if (ev.topics.size() != 4) return std::nullopt;  // 3 topics = ERC20 Transfer shape

  TransferRecord rec = base_record(ev, Standard::ERC721);
  rec.from = address_from_topic(ev.topics[1], "from");
  rec.to = address_from_topic(ev.topics[2], "to");
  rec.token_id = ev.topics[3].to_uint256();
  rec.amount = 1;
  return rec;
}

std::optional<TransferRecord> decode_erc1155_single(const RawLogEvent& ev) {
  if (ev.topics.empty() || ev.topics[0] != event_signatures().erc1155_single) return std::nullopt;
  if (ev.topics.size() != 4) return std::nullopt;

  if (ev.data.size() < 64)
    throw DecodeError("TransferSingle data too short: " + std::to_string(ev.data.size()) +
                      " bytes, need 64");

  address_from_topic(ev.topics[1], "operator");
  TransferRecord rec = base_record(ev, Standard::ERC1155);
  rec.from = address_from_topic(ev.topics[2], "from");
  rec.to = address_from_topic(ev.topics[3], "to");
  rec.token_id = word_at(ev.data, 0);
  rec.amount = word_at(ev.data, 32);
  rec.batch_pos = 0;
  return rec;
}

std::vector<TransferRecord> decode_erc1155_batch(const RawLogEvent& ev) {
  if (ev.topics.empty() || ev.topics[0] != event_signatures().erc1155_batch) return {};
  if (ev.topics.size() != 4) return {};

  const std::span<const std::uint8_t> data(ev.data);
  if (data.size() < 64) throw DecodeError("TransferBatch data too short for head words");

  // Head: two offset words pointing at the ids and values arrays; each array
  // is a length word followed by that many 32-byte elements.
  auto read_array = [&](std::size_t head_offset, const char* name) {
    const uint256 big_offset = word_at(data, head_offset);
    if (big_offset > data.size())
      throw DecodeError(std::string("TransferBatch ") + name + " offset out of bounds");
    const auto offset = static_cast<std::size_t>(big_offset);
    if (offset + 32 > data.size())
      throw DecodeError(std::string("TransferBatch ") + name + " offset out of bounds");
    const uint256 big_len = word_at(data, offset);
    if (big_len > (data.size() - offset - 32) / 32)
      throw DecodeError(std::string("TransferBatch ") + name + " length out of bounds");
    const auto len = static_cast<std::size_t>(big_len);
    std::vector<uint256> out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = word_at(data, offset + 32 + i * 32);
    return out;
  };

  const std::vector<uint256> ids = read_array(0, "ids");
  const std::vector<uint256> values = read_array(32, "values");
  if (ids.size() != values.size())
    throw DecodeError("TransferBatch ids/values length mismatch: " + std::to_string(ids.size()) +
                      " vs " + std::to_string(values.size()));

  address_from_topic(ev.topics[1], "operator");
  const Address from = address_from_topic(ev.topics[2], "from");
  const Address to = address_from_topic(ev.topics[3], "to");

  std::vector<TransferRecord> out;
  out.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    TransferRecord rec = base_record(ev, Standard::ERC1155);
    rec.from = from;
    rec.to = to;
    rec.token_id = ids[i];
    rec.amount = values[i];
    rec.batch_pos = static_cast<std::uint32_t>(i);
    out.push_back(std::move(rec));
  }
  return out;
}

ParseResult parse_log_stream(std::span<const RawLogEvent> events, bool strict) {
  ParseResult result;
  const EventSignatures& sigs = event_signatures();

  for (const RawLogEvent& ev : events) {
    if (ev.topics.empty()) {
      ++result.stats.dropped_non_nft;
      continue;
    }
    const Hash32& topic0 = ev.topics[0];
    try {
      if (topic0 == sigs.erc721_transfer) {
        if (auto rec = decode_erc721_transfer(ev)) {
          result.records.push_back(std::move(*rec));
          ++result.stats.decoded;
        } else {
          ++result.stats.dropped_non_nft;  // 2- or 3-topic (ERC20) shape
        }
      } else if (topic0 == sigs.erc1155_single) {
        if (auto rec = decode_erc1155_single(ev)) {
          result.records.push_back(std::move(*rec));
          ++result.stats.decoded;
        } else {
          ++result.stats.dropped_non_nft;
        }
      } else if (topic0 == sigs.erc1155_batch) {
        auto recs = decode_erc1155_batch(ev);
        if (ev.topics.size() != 4) {
          ++result.stats.dropped_non_nft;
        } else {
          result.stats.decoded += recs.size();
          std::move(recs.begin(), recs.end(), std::back_inserter(result.records));
        }
      } else {
        ++result.stats.dropped_non_nft;
      }
    } catch (const DecodeError&) {
      if (strict) throw;
      ++result.stats.malformed;
    }
  }
  return result;
}

}  // namespace nftscope::ingest
