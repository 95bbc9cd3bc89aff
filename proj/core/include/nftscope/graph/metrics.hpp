// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nftscope/graph/graphs.hpp"

namespace nftscope::graph {

enum class Direction : std::uint8_t { in, out };

/// Degree histogram over all nodes (zero-degree nodes included unless
/// include_zero is false). For the transfer graph, degree is the summed
/// edge weight in the given direction, i.e. the number of transfers an
/// account received or sent; pass weighted=false for distinct-neighbor
/// degrees.
struct DegreeDistribution {
  std::map<std::uint64_t, std::uint64_t> histogram;
  Direction direction = Direction::out;
};

struct DegreeOptions {
  bool weighted = true;
  bool include_zero = true;
};

DegreeDistribution degree_distribution(const TransferGraph& g, Direction direction,
                                       const DegreeOptions& options = {});
/// NFTs created per creator.
DegreeDistribution outdegree_distribution(const CreateGraph& g);
/// NFTs currently held per holder.
DegreeDistribution outdegree_distribution(const HoldGraph& g);

struct PowerLawFit {
  double alpha = 0;  // exponent of the density y ~ x^-alpha
  double r2 = 0;
  std::uint64_t xmin = 1;
};

class FitError : public Error {
 public:
  using Error::Error;
};

/// Least-squares line on log10(degree) vs log10(CCDF) over degrees >= xmin;
/// alpha is one minus the CCDF slope. Throws FitError when fewer than three
/// distinct degrees are available.
PowerLawFit fit_power_law(const DegreeDistribution& d, std::uint64_t xmin = 1);

/// Weighted PageRank with uniform redistribution of dangling mass. Returns
/// one score per node id; scores sum to 1 within 10*tol.
/// Throws ConfigError for damping outside (0,1) and InputError on an empty
/// graph.
std::vector<double> pagerank(const TransferGraph& g, double damping = 0.85, double tol = 1e-9,
                             std::uint32_t max_iter = 100);

/// Highest-scored nodes as (address, score), score-descending, address
/// ascending on ties.
std::vector<std::pair<Address, double>> top_pagerank(const TransferGraph& g,
                                                     std::span<const double> scores, std::size_t k);

/// Average local clustering coefficient over the unweighted undirected
/// projection (self-loops dropped); nodes with fewer than two neighbours
/// contribute zero. nullopt on an empty graph.
std::optional<double> clustering_coefficient(const TransferGraph& g);

/// Pearson correlation of endpoint degrees over the undirected projection's
/// edges (both orientations). nullopt when undefined (no edges or
/// zero-variance degrees).
std::optional<double> degree_assortativity(const TransferGraph& g);

/// Fraction of directed edges whose reverse edge exists, self-loops
/// excluded. nullopt when the graph has no non-loop edges.
std::optional<double> reciprocity(const TransferGraph& g);

struct ComponentSummary {
  std::uint64_t count = 0;
  std::uint64_t largest = 0;
};

/// Strongly connected components (iterative Tarjan, explicit stack).
ComponentSummary scc(const TransferGraph& g);
/// Weakly connected components via union-find on the undirected projection.
ComponentSummary wcc(const TransferGraph& g);

/// Distinct non-zero accounts appearing in the NFT's transfer history
/// (the zero-address mint/burn endpoint does not count).
/// Throws InputError for an NFT absent from the per-NFT index.
std::uint32_t count_transferors(const TransferGraph& g, const NftKey& nft);

enum class CountRole : std::uint8_t { creators, created_nfts, transferors, transfers, holders };

struct QuarterlyCount {
  Quarter quarter;
  Standard standard;
  std::uint64_t count = 0;
};

/// Per UTC calendar quarter and token standard:
///   creators      distinct mint recipients active in the quarter
///   created_nfts  NFTs whose first mint falls in the quarter
///   transferors   distinct non-zero accounts appearing as sender or
///                 recipient in the quarter
///   transfers     transfer records in the quarter
///   holders       distinct current holders (zero address included) at
///                 quarter end
std::vector<QuarterlyCount> quarterly_counts(std::span<const TransferRecord> records,
                                             CountRole role);

}  // namespace nftscope::graph
