// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#include "nftscope/ingest/text.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace nftscope::ingest {

std::vector<std::pair<std::string, std::uint64_t>> term_frequency(
    std::span<const DescriptiveText> texts, const std::unordered_set<std::string>& stopwords) {
  std::unordered_map<std::string, std::uint64_t> counts;
  std::string token;

  for (const DescriptiveText& t : texts) {
    auto flush = [&] {
      if (!token.empty() && !stopwords.contains(token)) ++counts[token];
      token.clear();
    };
    for (char c : t.description) {
      const auto uc = static_cast<unsigned char>(c);
      if (std::isalnum(uc))
        token += static_cast<char>(std::tolower(uc));
      else
        flush();
    }
    flush();
  }

  std::vector<std::pair<std::string, std::uint64_t>> out(counts.begin(), counts.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

}  // namespace nftscope::ingest
