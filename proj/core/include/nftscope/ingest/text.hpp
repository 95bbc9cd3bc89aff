// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "nftscope/ingest/io.hpp"

namespace nftscope::ingest {

/// Case-folded, punctuation-tokenized term counts over the description
/// fields, stopwords removed. Sorted by count descending, ties broken
/// lexicographically.
std::vector<std::pair<std::string, std::uint64_t>> term_frequency(
    std::span<const DescriptiveText> texts, const std::unordered_set<std::string>& stopwords);

}  // namespace nftscope::ingest
