// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#include "nftscope/ingest/io.hpp"

#include <charconv>
#include <fstream>

#include <json.hpp>

namespace nftscope::ingest {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open for reading: " + path);
  return in;
}

// The formats written here never quote fields (hex, decimal, enum tokens
// only), so a plain split is a full parser for them.
std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::uint64_t parse_u64(std::string_view s, const char* field) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InputError(std::string("bad ") + field + ": " + std::string(s));
  return v;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

[[noreturn]] void row_error(const std::string& path, std::size_t line_no, const std::string& what) {
  throw InputError(path + ":" + std::to_string(line_no) + ": " + what);
}

constexpr std::string_view kTransfersHeader =
    "standard,from,to,contract,token_id,amount,block_number,timestamp,tx_hash,log_index,batch_pos";

}  // namespace

std::string_view to_string(Category c) {
  switch (c) {
    case Category::art: return "art";
    case Category::collectibles: return "collectibles";
    case Category::ens: return "ens";
    case Category::music: return "music";
    case Category::sports: return "sports";
    case Category::gaming: return "gaming";
    case Category::decentraland: return "decentraland";
  }
  throw InputError("bad category value");
}

Category category_from_string(std::string_view s) {
  if (s == "art") return Category::art;
  if (s == "collectibles") return Category::collectibles;
  if (s == "ens") return Category::ens;
  if (s == "music") return Category::music;
  if (s == "sports") return Category::sports;
  if (s == "gaming") return Category::gaming;
  if (s == "decentraland") return Category::decentraland;
  throw InputError("unknown category: " + std::string(s));
}

void write_transfers_csv(const std::string& path, std::span<const TransferRecord> records) {
  std::ofstream out = open_out(path);
  out << kTransfersHeader << '\n';
  for (const TransferRecord& r : records) {
    out << to_string(r.standard) << ',' << r.from.to_hex() << ',' << r.to.to_hex() << ','
        << r.contract.to_hex() << ',' << r.token_id.str() << ',' << r.amount.str() << ','
        << r.block_number << ',' << r.timestamp << ',' << r.tx_hash.to_hex() << ',' << r.log_index
        << ',' << r.batch_pos << '\n';
  }
  if (!out) throw InputError("write failed: " + path);
}

TransfersLoad load_transfers_csv(const std::string& path, bool strict) {
  std::ifstream in = open_in(path);
  TransfersLoad result;
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw InputError(path + ": empty file, header expected");
  ++line_no;
  strip_cr(line);
  if (line != kTransfersHeader) row_error(path, line_no, "unexpected transfers header");

  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    try {
      const auto f = split_csv(line);
      if (f.size() != 11) throw InputError("expected 11 fields, got " + std::to_string(f.size()));
      TransferRecord r;
      r.standard = standard_from_string(f[0]);
      r.from = Address::from_hex(f[1]);
      r.to = Address::from_hex(f[2]);
      r.contract = Address::from_hex(f[3]);
      r.token_id = parse_uint256(f[4]);
      r.amount = parse_uint256(f[5]);
      r.block_number = parse_u64(f[6], "block_number");
      r.timestamp = static_cast<std::int64_t>(parse_u64(f[7], "timestamp"));
      r.tx_hash = Hash32::from_hex(f[8]);
      r.log_index = parse_u64(f[9], "log_index");
      r.batch_pos = static_cast<std::uint32_t>(parse_u64(f[10], "batch_pos"));
      result.records.push_back(std::move(r));
    } catch (const InputError& e) {
      if (strict) row_error(path, line_no, e.what());
      ++result.skipped;
    }
  }
  return result;
}

void write_tx_values_csv(const std::string& path, std::span<const TxValueRecord> values) {
  std::ofstream out = open_out(path);
  out << "tx_hash,value_wei\n";
  for (const TxValueRecord& v : values)
    out << v.tx_hash.to_hex() << ',' << v.value_wei.str() << '\n';
  if (!out) throw InputError("write failed: " + path);
}

TxValuesLoad load_tx_values(const std::string& path, bool strict) {
  std::ifstream in = open_in(path);
  TxValuesLoad result;
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw InputError(path + ": empty file, header expected");
  ++line_no;
  strip_cr(line);
  if (line != "tx_hash,value_wei") row_error(path, line_no, "unexpected tx values header");

  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    try {
      const auto f = split_csv(line);
      if (f.size() != 2) throw InputError("expected 2 fields");
      const Hash32 tx = Hash32::from_hex(f[0]);
      const uint256 value = parse_uint256(f[1]);
      if (result.values.contains(tx)) ++result.warnings;  // last wins
      result.values[tx] = value;
    } catch (const InputError& e) {
      if (strict) row_error(path, line_no, e.what());
      ++result.warnings;
    }
  }
  return result;
}

void write_category_labels(const std::string& path, std::span<const CategoryLabel> labels) {
  std::ofstream out = open_out(path);
  out << "contract,category\n";
  for (const CategoryLabel& l : labels)
    out << l.contract.to_hex() << ',' << to_string(l.category) << '\n';
  if (!out) throw InputError("write failed: " + path);
}

LabelsLoad load_category_labels(const std::string& path, bool strict) {
  std::ifstream in = open_in(path);
  LabelsLoad result;
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw InputError(path + ": empty file, header expected");
  ++line_no;
  strip_cr(line);
  if (line != "contract,category") row_error(path, line_no, "unexpected labels header");

  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    try {
      const auto f = split_csv(line);
      if (f.size() != 2) throw InputError("expected 2 fields");
      const Address contract = Address::from_hex(f[0]);
      const Category cat = category_from_string(f[1]);
      if (result.labels.contains(contract)) ++result.warnings;  // last wins
      result.labels[contract] = cat;
    } catch (const InputError& e) {
      if (strict) row_error(path, line_no, e.what());
      ++result.warnings;
    }
  }
  return result;
}

void write_descriptive_texts(const std::string& path, std::span<const DescriptiveText> texts) {
  std::ofstream out = open_out(path);
  for (const DescriptiveText& t : texts) {
    nlohmann::json obj{
        {"contract", t.contract.to_hex()}, {"name", t.name}, {"description", t.description}};
    out << obj.dump() << '\n';
  }
  if (!out) throw InputError("write failed: " + path);
}

TextsLoad load_descriptive_texts(const std::string& path, bool strict) {
  std::ifstream in = open_in(path);
  TextsLoad result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    try {
      const auto obj = nlohmann::json::parse(line);
      DescriptiveText t;
      t.contract = Address::from_hex(obj.at("contract").get<std::string>());
      t.name = obj.at("name").get<std::string>();
      t.description = obj.at("description").get<std::string>();
      result.texts.push_back(std::move(t));
    } catch (const std::exception& e) {
      if (strict) row_error(path, line_no, e.what());
      ++result.warnings;
    }
  }
  return result;
}

void write_raw_logs_jsonl(const std::string& path, std::span<const RawLogEvent> events) {
  std::ofstream out = open_out(path);
  for (const RawLogEvent& ev : events) {
    nlohmann::json topics = nlohmann::json::array();
    for (const Hash32& t : ev.topics) topics.push_back(t.to_hex());
    nlohmann::json obj{
        {"address", ev.contract_address.to_hex()},
        {"topics", std::move(topics)},
        {"data", to_hex(ev.data)},
        {"blockNumber", to_hex_quantity(ev.block_number)},
        {"timestamp", to_hex_quantity(static_cast<std::uint64_t>(ev.timestamp))},
        {"transactionHash", ev.tx_hash.to_hex()},
        {"logIndex", to_hex_quantity(ev.log_index)},
    };
    out << obj.dump() << '\n';
  }
  if (!out) throw InputError("write failed: " + path);
}

RawLogsLoad load_raw_logs_jsonl(const std::string& path, bool strict) {
  std::ifstream in = open_in(path);
  RawLogsLoad result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    try {
      const auto obj = nlohmann::json::parse(line);
      RawLogEvent ev;
      ev.contract_address = Address::from_hex(obj.at("address").get<std::string>());
      for (const auto& t : obj.at("topics"))
        ev.topics.push_back(Hash32::from_hex(t.get<std::string>()));
      if (ev.topics.empty()) throw InputError("topics must be non-empty");
      ev.data = from_hex(obj.at("data").get<std::string>());
      ev.block_number = parse_hex_quantity(obj.at("blockNumber").get<std::string>());
      ev.timestamp =
          static_cast<std::int64_t>(parse_hex_quantity(obj.at("timestamp").get<std::string>()));
      ev.tx_hash = Hash32::from_hex(obj.at("transactionHash").get<std::string>());
      ev.log_index = parse_hex_quantity(obj.at("logIndex").get<std::string>());
      result.events.push_back(std::move(ev));
    } catch (const std::exception& e) {
      if (strict) row_error(path, line_no, e.what());
      ++result.skipped;
    }
  }
  return result;
}

void write_nft_keys_csv(const std::string& path, std::span<const NftKey> keys) {
  std::ofstream out = open_out(path);
  out << "contract,token_id\n";
  for (const NftKey& k : keys) out << k.contract.to_hex() << ',' << k.token_id.str() << '\n';
  if (!out) throw InputError("write failed: " + path);
}

std::vector<NftKey> load_nft_keys_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<NftKey> keys;
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw InputError(path + ": empty file, header expected");
  ++line_no;
  strip_cr(line);
  if (line != "contract,token_id") row_error(path, line_no, "unexpected header");

  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 2) row_error(path, line_no, "expected 2 fields");
    keys.push_back(NftKey{Address::from_hex(f[0]), parse_uint256(f[1])});
  }
  return keys;
}

}  // namespace nftscope::ingest
