// This code is part of rydmis.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#ifndef RYDMIS_GRAPH_HPP
#define RYDMIS_GRAPH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rydmis/basis.hpp"

namespace rydmis {

// Unit-disk graph of atoms in a square box. All lengths are in units of the
// blockade radius r_b, so blockade_radius is 1 by construction and the box
// side follows from the requested density nu = N r_b^2 / L^2. Two vertices
// are adjacent iff their Euclidean distance is strictly below r_b; coincident
// atoms (distance 0) are therefore adjacent.
struct UdGraph {
  int n_atoms = 0;
  double box_side = 0.0;
  double blockade_radius = 1.0;
  std::vector<std::array<double, 2>> positions;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted lexicographically
  std::uint64_t seed = 0;

  double density() const;
  double distance(int i, int j) const;
  bool has_edge(int i, int j) const;

  // Bit j of mask i set iff (i, j) is an edge. Valid for n_atoms <= 31.
  std::vector<std::uint32_t> adjacency_masks() const;

  std::string to_json() const;
  static UdGraph from_json(const std::string& text);
};

struct MisResult {
  int size = 0;
  BasisState witness;
};

UdGraph generate_graph(int n_atoms, double density, std::uint64_t seed);

bool is_independent_set(const UdGraph& graph, const BasisState& state);

// Exact maximum independent set by branch and bound with max-degree pivoting.
// Ties between maximum sets are broken by the smallest integer encoding of
// the witness. Enforces n_atoms <= 24.
MisResult solve_mis_exact(const UdGraph& graph);

}  // namespace rydmis

#endif
