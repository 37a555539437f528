// This code is part of rydmis.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "rydmis/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "rydmis/errors.hpp"
#include "rydmis/rng.hpp"

namespace rydmis {

double UdGraph::density() const {
  return n_atoms * blockade_radius * blockade_radius / (box_side * box_side);
}

double UdGraph::distance(int i, int j) const {
  const double dx = positions[i][0] - positions[j][0];
  const double dy = positions[i][1] - positions[j][1];
  return std::hypot(dx, dy);
}

bool UdGraph::has_edge(int i, int j) const {
  if (i == j) return false;
  const auto e = std::minmax(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(e.first, e.second));
}

std::vector<std::uint32_t> UdGraph::adjacency_masks() const {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n_atoms), 0u);
  for (const auto& [i, j] : edges) {
    adj[i] |= 1u << j;
    adj[j] |= 1u << i;
  }
  return adj;
}

UdGraph generate_graph(int n_atoms, double density, std::uint64_t seed) {
  if (n_atoms < 1) throw std::invalid_argument("generate_graph: n_atoms must be >= 1");
  if (!(density > 0.0)) throw std::invalid_argument("generate_graph: density must be > 0");

  UdGraph g;
  g.n_atoms = n_atoms;
  g.blockade_radius = 1.0;
  g.box_side = std::sqrt(static_cast<double>(n_atoms) / density);
  g.seed = seed;

  Rng rng(seed);
  g.positions.reserve(static_cast<std::size_t>(n_atoms));
  for (int i = 0; i < n_atoms; ++i) {
    const double x = rng.uniform(0.0, g.box_side);
    const double y = rng.uniform(0.0, g.box_side);
    g.positions.push_back({x, y});
  }

  for (int i = 0; i < n_atoms; ++i)
    for (int j = i + 1; j < n_atoms; ++j)
      if (g.distance(i, j) < g.blockade_radius) g.edges.emplace_back(i, j);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

bool is_independent_set(const UdGraph& graph, const BasisState& state) {
  if (state.n != graph.n_atoms)
    throw std::invalid_argument("is_independent_set: bit length does not match graph");
  for (const auto& [i, j] : graph.edges)
    if (state.occupied(i) && state.occupied(j)) return false;
  return true;
}

namespace {

struct MisSearch {
  const std::vector<std::uint32_t>& adj;
  int best_size = -1;
  std::uint32_t best_set = 0;

  void consider(std::uint32_t chosen) {
    const int size = std::popcount(chosen);
    if (size > best_size || (size == best_size && chosen < best_set)) {
      best_size = size;
      best_set = chosen;
    }
  }

  // candidates: vertices still allowed. chosen: vertices taken so far.
  void run(std::uint32_t candidates, std::uint32_t chosen) {
    if (candidates == 0) {
      consider(chosen);
      return;
    }
    // Keep searching while an equal-size set remains reachable so that
    // the smallest-encoding tie-break sees every maximum set.
    if (std::popcount(chosen) + std::popcount(candidates) < best_size) return;

    // Pivot on the candidate of maximum degree within the candidate set.
    int pivot = -1, pivot_deg = -1;
    for (std::uint32_t m = candidates; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int deg = std::popcount(adj[v] & candidates);
      if (deg > pivot_deg) {
        pivot_deg = deg;
        pivot = v;
      }
    }
    const std::uint32_t bit = 1u << pivot;
    run((candidates & ~bit) & ~adj[pivot], chosen | bit);  // include pivot
    run(candidates & ~bit, chosen);                        // exclude pivot
  }
};

}  // namespace

MisResult solve_mis_exact(const UdGraph& graph) {
  if (graph.n_atoms > 24)
    throw ResourceLimitError("solve_mis_exact: n_atoms exceeds the exact-search cap of 24");
  const auto adj = graph.adjacency_masks();
  MisSearch search{adj};
  const std::uint32_t all = graph.n_atoms == 32 ? ~0u : (1u << graph.n_atoms) - 1u;
  search.run(all, 0u);
  return MisResult{search.best_size, BasisState(search.best_set, graph.n_atoms)};
}

std::string UdGraph::to_json() const {
  nlohmann::json j;
  j["n"] = n_atoms;
  j["box_side"] = box_side;
  j["blockade_radius"] = blockade_radius;
  auto positions_json = nlohmann::json::array();
  for (const auto& p : positions) positions_json.push_back({p[0], p[1]});
  j["positions"] = positions_json;
  auto edges_json = nlohmann::json::array();
  for (const auto& [a, b] : edges) edges_json.push_back({a, b});
  j["edges"] = edges_json;
  j["seed"] = std::to_string(seed);
  return j.dump();
}

UdGraph UdGraph::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  UdGraph g;
  g.n_atoms = j.at("n").get<int>();
  g.box_side = j.at("box_side").get<double>();
  g.blockade_radius = j.at("blockade_radius").get<double>();
  for (const auto& p : j.at("positions"))
    g.positions.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  for (const auto& e : j.at("edges"))
    g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  std::sort(g.edges.begin(), g.edges.end());
  g.seed = std::stoull(j.at("seed").get<std::string>());
  return g;
}

}  // namespace rydmis
