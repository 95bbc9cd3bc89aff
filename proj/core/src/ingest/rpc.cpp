// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#include "nftscope/ingest/rpc.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <json.hpp>

#include "nftscope/ingest/decode.hpp"

namespace nftscope::ingest {

namespace {

using nlohmann::json;

struct Endpoint {
  std::string base;  // scheme://host[:port]
  std::string path;  // "/" when absent
};

Endpoint split_endpoint(const std::string& url) {
  const std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw ConfigError("endpoint must be an http(s) URL: " + url);
  const std::size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

/// Provider rejected the request as too big; retried by halving the window.
struct TooLargeError {
  std::string message;
};

class RpcClient {
 public:
  RpcClient(const Endpoint& ep, const RpcOptions& options)
      : endpoint_(ep), options_(options), http_(ep.base) {
    http_.set_connection_timeout(10);
    http_.set_read_timeout(30);
  }

  /// Single JSON-RPC 2.0 call with transport-level retry. Throws
  /// TooLargeError on provider size rejections and NetworkError once
  /// retries are exhausted.
  json call(const std::string& method, json params) {
    const json request{
        {"jsonrpc", "2.0"}, {"id", ++next_id_}, {"method", method}, {"params", std::move(params)}};
    const std::string body = request.dump();

    auto backoff = options_.initial_backoff;
    for (std::uint32_t attempt = 0;; ++attempt) {
      auto res = http_.Post(endpoint_.path, body, "application/json");
      if (res && res->status == 200) {
        json reply = json::parse(res->body, nullptr, false);
        if (reply.is_discarded())
          throw NetworkError("invalid JSON from RPC endpoint for " + method);
        if (reply.contains("error") && !reply["error"].is_null()) {
          const auto& err = reply["error"];
          const std::int64_t code = err.value("code", std::int64_t{0});
          const std::string message = err.value("message", std::string("rpc error"));
          if (is_too_large(code, message)) throw TooLargeError{message};
          throw NetworkError("rpc error " + std::to_string(code) + " for " + method + ": " +
                             message);
        }
        return reply.at("result");
      }
      if (attempt >= options_.max_retries) {
        const std::string status =
            res ? "HTTP " + std::to_string(res->status) : httplib::to_string(res.error());
        throw NetworkError("RPC endpoint unreachable after " + std::to_string(attempt + 1) +
                           " attempts (" + status + "): " + endpoint_.base);
      }
      std::this_thread::sleep_for(backoff);
      backoff = std::min(backoff * 2, options_.max_backoff);
    }
  }

 private:
  static bool is_too_large(std::int64_t code, const std::string& message) {
    if (code == -32005) return true;  // common "limit exceeded" code
    std::string lower(message.size(), '\0');
    std::transform(message.begin(), message.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return lower.find("too large") != std::string::npos ||
           lower.find("exceed") != std::string::npos ||
           lower.find("more than") != std::string::npos ||
           lower.find("too many") != std::string::npos;
  }

  Endpoint endpoint_;
  RpcOptions options_;
  httplib::Client http_;
  std::atomic<std::uint64_t> next_id_{0};
};

RawLogEvent parse_log_entry(const json& entry) {
  RawLogEvent ev;
  ev.contract_address = Address::from_hex(entry.at("address").get<std::string>());
  for (const auto& t : entry.at("topics")) ev.topics.push_back(Hash32::from_hex(t.get<std::string>()));
  if (ev.topics.empty()) throw InputError("log entry with empty topics");
  ev.data = from_hex(entry.at("data").get<std::string>());
  ev.block_number = parse_hex_quantity(entry.at("blockNumber").get<std::string>());
  ev.tx_hash = Hash32::from_hex(entry.at("transactionHash").get<std::string>());
  ev.log_index = parse_hex_quantity(entry.at("logIndex").get<std::string>());
  return ev;
}

json topic_filter() {
  const EventSignatures& sigs = event_signatures();
  return json::array({json::array(
      {sigs.erc721_transfer.to_hex(), sigs.erc1155_single.to_hex(), sigs.erc1155_batch.to_hex()})});
}

/// Fetches one window, splitting it in half whenever the provider rejects
/// the response as too large; a single-block rejection is fatal.
void fetch_window(RpcClient& client, std::uint64_t lo, std::uint64_t hi,
                  std::vector<RawLogEvent>& out) {
  try {
    const json params = json::array({json{{"fromBlock", to_hex_quantity(lo)},
                                          {"toBlock", to_hex_quantity(hi)},
                                          {"topics", topic_filter()}}});
    const json result = client.call("eth_getLogs", params);
    for (const auto& entry : result) out.push_back(parse_log_entry(entry));
  } catch (const TooLargeError& e) {
    if (lo == hi)
      throw NetworkError("provider rejects single-block eth_getLogs window at block " +
                         std::to_string(lo) + ": " + e.message);
    const std::uint64_t mid = lo + (hi - lo) / 2;
    fetch_window(client, lo, mid, out);
    fetch_window(client, mid + 1, hi, out);
  }
}

}  // namespace

std::vector<RawLogEvent> fetch_logs_rpc(const std::string& endpoint, std::uint64_t from_block,
                                        std::uint64_t to_block, std::uint64_t chunk,
                                        const RpcOptions& options) {
  if (from_block > to_block)
    throw ConfigError("from_block " + std::to_string(from_block) + " > to_block " +
                      std::to_string(to_block));
  if (chunk == 0) throw ConfigError("chunk must be >= 1");

  const Endpoint ep = split_endpoint(endpoint);

  // Top-level windows; each worker halves its own window as needed and
  // results are stitched back in window order.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> windows;
  for (std::uint64_t lo = from_block; lo <= to_block;) {
    const std::uint64_t hi = std::min(to_block, lo + chunk - 1);
    windows.emplace_back(lo, hi);
    if (hi == to_block) break;
    lo = hi + 1;
  }

  std::vector<std::vector<RawLogEvent>> per_window(windows.size());
  std::vector<std::exception_ptr> errors(windows.size());
  std::atomic<std::size_t> next{0};

  const std::size_t n_workers =
      std::max<std::size_t>(1, std::min<std::size_t>(options.jobs, windows.size()));
  auto worker = [&] {
    RpcClient client(ep, options);
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= windows.size()) return;
      try {
        fetch_window(client, windows[i].first, windows[i].second, per_window[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(n_workers);
    for (std::size_t i = 0; i < n_workers; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  std::vector<RawLogEvent> events;
  for (auto& w : per_window) std::move(w.begin(), w.end(), std::back_inserter(events));

  // Resolve block timestamps once per distinct block.
  RpcClient client(ep, options);
  std::unordered_map<std::uint64_t, std::int64_t> ts_cache;
  for (RawLogEvent& ev : events) {
    auto it = ts_cache.find(ev.block_number);
    if (it == ts_cache.end()) {
      const json block = client.call(
          "eth_getBlockByNumber", json::array({to_hex_quantity(ev.block_number), false}));
      if (block.is_null())
        throw NetworkError("eth_getBlockByNumber returned null for block " +
                           std::to_string(ev.block_number));
      const auto ts =
          static_cast<std::int64_t>(parse_hex_quantity(block.at("timestamp").get<std::string>()));
      it = ts_cache.emplace(ev.block_number, ts).first;
    }
    ev.timestamp = it->second;
  }

  std::stable_sort(events.begin(), events.end(), [](const RawLogEvent& a, const RawLogEvent& b) {
    return std::tie(a.block_number, a.log_index) < std::tie(b.block_number, b.log_index);
  });
  return events;
}

}  // namespace nftscope::ingest
