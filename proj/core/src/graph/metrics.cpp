// Copyright 2026 The nftscope Authors
// SPDX-License-Identifier: Apache-2.0

#include "nftscope/graph/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_set>

namespace nftscope::graph {

namespace {

/// Undirected simple-graph projection as sorted adjacency lists,
/// self-loops dropped.
std::vector<std::vector<std::uint32_t>> undirected_projection(const TransferGraph& g) {
  std::vector<std::set<std::uint32_t>> adj(g.node_count());
  for (const auto& [key, w] : g.edges()) {
    const auto u = static_cast<std::uint32_t>(key >> 32);
    const auto v = static_cast<std::uint32_t>(key & 0xffffffff);
    if (u == v) continue;
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<std::vector<std::uint32_t>> out(adj.size());
  for (std::size_t i = 0; i < adj.size(); ++i) out[i].assign(adj[i].begin(), adj[i].end());
  return out;
}

}  // namespace

DegreeDistribution degree_distribution(const TransferGraph& g, Direction direction,
                                       const DegreeOptions& options) {
  std::vector<std::uint64_t> degree(g.node_count(), 0);
  for (const auto& [key, w] : g.edges()) {
    const auto u = static_cast<std::uint32_t>(key >> 32);
    const auto v = static_cast<std::uint32_t>(key & 0xffffffff);
    const std::uint32_t node = direction == Direction::out ? u : v;
    degree[node] += options.weighted ? w : 1;
  }
  DegreeDistribution d;
  d.direction = direction;
  for (std::uint64_t deg : degree) {
    if (deg == 0 && !options.include_zero) continue;
    ++d.histogram[deg];
  }
  return d;
}

DegreeDistribution outdegree_distribution(const CreateGraph& g) {
  std::unordered_map<Address, std::uint64_t> per_creator;
  for (const auto& [key, edge] : g.edges) ++per_creator[edge.creator];
  DegreeDistribution d;
  d.direction = Direction::out;
  for (const auto& [creator, n] : per_creator) ++d.histogram[n];
  return d;
}

DegreeDistribution outdegree_distribution(const HoldGraph& g) {
  std::unordered_map<Address, std::uint64_t> per_holder;
  for (const auto& [key, state] : g.holders) ++per_holder[state.holder];
  DegreeDistribution d;
  d.direction = Direction::out;
  for (const auto& [holder, n] : per_holder) ++d.histogram[n];
  return d;
}

PowerLawFit fit_power_law(const DegreeDistribution& d, std::uint64_t xmin) {
  xmin = std::max<std::uint64_t>(xmin, 1);

  // CCDF over nodes with degree >= xmin: tail counts by descending degree.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> degrees;  // (degree, count)
  for (const auto& [deg, count] : d.histogram)
    if (deg >= xmin) degrees.emplace_back(deg, count);
  if (degrees.size() < 3)
    throw FitError("power-law fit needs at least 3 distinct degrees >= xmin, have " +
                   std::to_string(degrees.size()));

  std::uint64_t total = 0;
  for (const auto& [deg, count] : degrees) total += count;

  std::vector<double> lx, ly;
  lx.reserve(degrees.size());
  ly.reserve(degrees.size());
  std::uint64_t tail = total;
  for (const auto& [deg, count] : degrees) {
    lx.push_back(std::log10(static_cast<double>(deg)));
    ly.push_back(std::log10(static_cast<double>(tail) / static_cast<double>(total)));
    tail -= count;
  }

  const auto n = static_cast<double>(lx.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0) throw FitError("degenerate degree support for power-law fit");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;

  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double pred = slope * lx[i] + intercept;
    ss_res += (ly[i] - pred) * (ly[i] - pred);
    ss_tot += (ly[i] - my) * (ly[i] - my);
  }

  PowerLawFit fit;
  fit.alpha = 1.0 - slope;  // CCDF of x^-alpha decays as x^-(alpha-1)
  fit.r2 = ss_tot == 0 ? 0.0 : std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
  fit.xmin = xmin;
  return fit;
}

std::vector<double> pagerank(const TransferGraph& g, double damping, double tol,
                             std::uint32_t max_iter) {
  if (!(damping > 0.0 && damping < 1.0))
    throw ConfigError("pagerank damping must be in (0,1), got " + std::to_string(damping));
  const std::size_t n = g.node_count();
  if (n == 0) throw InputError("pagerank on empty graph");

  struct OutEdge {
    std::uint32_t to;
    double share;  // w(u,v) / out_strength(u)
  };
  std::vector<double> out_strength(n, 0.0);
  for (const auto& [key, w] : g.edges())
    out_strength[static_cast<std::uint32_t>(key >> 32)] += static_cast<double>(w);

  // CSR by source node for deterministic accumulation order.
  std::vector<std::uint64_t> count(n, 0);
  for (const auto& [key, w] : g.edges()) ++count[static_cast<std::uint32_t>(key >> 32)];
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + count[i];
  std::vector<OutEdge> csr(g.edge_count());
  {
    std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
    for (const auto& [key, w] : g.edges()) {
      const auto u = static_cast<std::uint32_t>(key >> 32);
      const auto v = static_cast<std::uint32_t>(key & 0xffffffff);
      csr[cursor[u]++] = OutEdge{v, static_cast<double>(w) / out_strength[u]};
    }
  }

  std::vector<double> rank(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n, 0.0);
  const double base = (1.0 - damping) / static_cast<double>(n);

  for (std::uint32_t iter = 0; iter < max_iter; ++iter) {
    double dangling = 0.0;
    for (std::size_t u = 0; u < n; ++u)
      if (out_strength[u] == 0.0) dangling += rank[u];

    std::fill(next.begin(), next.end(), base + damping * dangling / static_cast<double>(n));
    for (std::size_t u = 0; u < n; ++u) {
      const double pushed = damping * rank[u];
      for (std::size_t e = offset[u]; e < offset[u + 1]; ++e)
        next[csr[e].to] += pushed * csr[e].share;
    }

    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) delta += std::abs(next[i] - rank[i]);
    rank.swap(next);
    if (delta < tol) break;
  }
  return rank;
}

std::vector<std::pair<Address, double>> top_pagerank(const TransferGraph& g,
                                                     std::span<const double> scores,
                                                     std::size_t k) {
  std::vector<std::pair<Address, double>> all;
  all.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i)
    all.emplace_back(g.node(static_cast<std::uint32_t>(i)), scores[i]);
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (all.size() > k) all.resize(k);
  return all;
}

std::optional<double> clustering_coefficient(const TransferGraph& g) {
  if (g.node_count() == 0) return std::nullopt;
  const auto adj = undirected_projection(g);

  double sum = 0.0;
  for (const auto& neigh : adj) {
    const std::size_t k = neigh.size();
    if (k < 2) continue;
    std::uint64_t links = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const auto& nb = adj[neigh[i]];
        if (std::binary_search(nb.begin(), nb.end(), neigh[j])) ++links;
      }
    }
    sum += 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
  }
  return sum / static_cast<double>(g.node_count());
}

std::optional<double> degree_assortativity(const TransferGraph& g) {
  const auto adj = undirected_projection(g);

  // Pearson over edge endpoint degrees, both orientations of each edge.
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  std::uint64_t m2 = 0;  // directed endpoint pairs
  for (std::uint32_t u = 0; u < adj.size(); ++u) {
    const auto du = static_cast<double>(adj[u].size());
    for (std::uint32_t v : adj[u]) {
      const auto dv = static_cast<double>(adj[v].size());
      sx += du;
      sy += dv;
      sxx += du * du;
      syy += dv * dv;
      sxy += du * dv;
      ++m2;
    }
  }
  if (m2 == 0) return std::nullopt;
  const auto n = static_cast<double>(m2);
  const double cov = sxy / n - (sx / n) * (sy / n);
  const double var_x = sxx / n - (sx / n) * (sx / n);
  const double var_y = syy / n - (sy / n) * (sy / n);
  if (var_x <= 0 || var_y <= 0) return std::nullopt;
  return std::clamp(cov / std::sqrt(var_x * var_y), -1.0, 1.0);
}

std::optional<double> reciprocity(const TransferGraph& g) {
  std::uint64_t total = 0, mutual = 0;
  for (const auto& [key, w] : g.edges()) {
    const auto u = static_cast<std::uint32_t>(key >> 32);
    const auto v = static_cast<std::uint32_t>(key & 0xffffffff);
    if (u == v) continue;
    ++total;
    if (g.edges().contains(TransferGraph::edge_key(v, u))) ++mutual;
  }
  if (total == 0) return std::nullopt;
  return static_cast<double>(mutual) / static_cast<double>(total);
}

namespace {

std::vector<std::vector<std::uint32_t>> directed_adjacency(const TransferGraph& g) {
  std::vector<std::vector<std::uint32_t>> adj(g.node_count());
  for (const auto& [key, w] : g.edges())
    adj[static_cast<std::uint32_t>(key >> 32)].push_back(static_cast<std::uint32_t>(key & 0xffffffff));
  return adj;
}

}  // namespace

ComponentSummary scc(const TransferGraph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return {};
  const auto adj = directed_adjacency(g);

  constexpr std::uint32_t kUnvisited = 0xffffffff;
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t next_index = 0;

  ComponentSummary result;

  // Tarjan with an explicit DFS frame stack.
  struct Frame {
    std::uint32_t node;
    std::size_t edge;
  };
  std::vector<Frame> frames;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      Frame& f = frames.back();
      const std::uint32_t u = f.node;
      if (f.edge < adj[u].size()) {
        const std::uint32_t v = adj[u][f.edge++];
        if (index[v] == kUnvisited) {
          index[v] = lowlink[v] = next_index++;
          stack.push_back(v);
          on_stack[v] = true;
          frames.push_back({v, 0});
        } else if (on_stack[v]) {
          lowlink[u] = std::min(lowlink[u], index[v]);
        }
      } else {
        if (lowlink[u] == index[u]) {
          std::uint64_t size = 0;
          while (true) {
            const std::uint32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            ++size;
            if (w == u) break;
          }
          ++result.count;
          result.largest = std::max(result.largest, size);
        }
        frames.pop_back();
        if (!frames.empty()) {
          const std::uint32_t parent = frames.back().node;
          lowlink[parent] = std::min(lowlink[parent], lowlink[u]);
        }
      }
    }
  }
  return result;
}

ComponentSummary wcc(const TransferGraph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return {};

  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::uint32_t> size(n, 1);

  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  };

  for (const auto& [key, w] : g.edges())
    unite(static_cast<std::uint32_t>(key >> 32), static_cast<std::uint32_t>(key & 0xffffffff));

  ComponentSummary result;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (find(i) == i) {
      ++result.count;
      result.largest = std::max<std::uint64_t>(result.largest, size[i]);
    }
  }
  return result;
}

std::uint32_t count_transferors(const TransferGraph& g, const NftKey& nft) {
  auto it = g.nft_index.find(nft);
  if (it == g.nft_index.end())
    throw InputError("NFT not present in transfer index: " + nft.contract.to_hex() + "/" +
                     nft.token_id.str());
  std::unordered_set<Address> accounts;
  for (const TransferEvent& ev : it->second) {
    if (!ev.from.is_zero()) accounts.insert(ev.from);
    if (!ev.to.is_zero()) accounts.insert(ev.to);
  }
  return static_cast<std::uint32_t>(accounts.size());
}

std::vector<QuarterlyCount> quarterly_counts(std::span<const TransferRecord> records,
                                             CountRole role) {
  std::map<std::pair<Quarter, Standard>, std::uint64_t> counts;

  switch (role) {
    case CountRole::creators: {
      std::map<std::pair<Quarter, Standard>, std::unordered_set<Address>> sets;
      for (const TransferRecord& r : records)
        if (r.is_mint()) sets[{quarter_of(r.timestamp), r.standard}].insert(r.to);
      for (const auto& [key, s] : sets) counts[key] = s.size();
      break;
    }
    case CountRole::created_nfts: {
      std::unordered_set<NftKey> seen;
      for (const TransferRecord& r : records) {
        if (!r.is_mint()) continue;
        if (seen.insert(r.nft()).second) ++counts[{quarter_of(r.timestamp), r.standard}];
      }
      break;
    }
    case CountRole::transferors: {
      std::map<std::pair<Quarter, Standard>, std::unordered_set<Address>> sets;
      for (const TransferRecord& r : records) {
        auto& s = sets[{quarter_of(r.timestamp), r.standard}];
        if (!r.from.is_zero()) s.insert(r.from);
        if (!r.to.is_zero()) s.insert(r.to);
      }
      for (const auto& [key, s] : sets) counts[key] = s.size();
      break;
    }
    case CountRole::transfers: {
      for (const TransferRecord& r : records) ++counts[{quarter_of(r.timestamp), r.standard}];
      break;
    }
    case CountRole::holders: {
      // Replay in stream order, snapshotting distinct holders per standard
      // at each quarter boundary.
      std::vector<const TransferRecord*> ordered;
      ordered.reserve(records.size());
      for (const TransferRecord& r : records) ordered.push_back(&r);
      std::stable_sort(ordered.begin(), ordered.end(),
                       [](const auto* a, const auto* b) { return a->order_key() < b->order_key(); });

      std::unordered_map<NftKey, std::pair<Address, Standard>> holder;
      auto snapshot = [&](const Quarter& q) {
        std::unordered_set<Address> h721, h1155;
        for (const auto& [key, hs] : holder)
          (hs.second == Standard::ERC721 ? h721 : h1155).insert(hs.first);
        if (!h721.empty()) counts[{q, Standard::ERC721}] = h721.size();
        if (!h1155.empty()) counts[{q, Standard::ERC1155}] = h1155.size();
      };

      std::optional<Quarter> current;
      for (const TransferRecord* r : ordered) {
        const Quarter q = quarter_of(r->timestamp);
        if (current && q != *current) {
          // Close out every quarter up to (excluding) q.
          for (Quarter qq = *current; qq < q; qq = next_quarter(qq)) snapshot(qq);
        }
        current = q;
        holder[r->nft()] = {r->to, r->standard};
      }
      if (current) snapshot(*current);
      break;
    }
  }

  std::vector<QuarterlyCount> out;
  out.reserve(counts.size());
  for (const auto& [key, n] : counts) out.push_back({key.first, key.second, n});
  return out;
}

}  // namespace nftscope::graph
