// This code is part of rydmis.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#ifndef RYDMIS_BASIS_HPP
#define RYDMIS_BASIS_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rydmis {

// A computational basis state over n qubits, encoded as an integer word.
// Bit j (LSB = bit 0) is the occupation z_j of vertex j: 1 means vertex j is
// in the set (atom j in the Rydberg state), 0 means it is not. The encoding
// is the bijection z <-> sum_j z_j 2^j with 0 <= z < 2^n.
struct BasisState {
  std::uint32_t bits = 0;
  int n = 0;

  BasisState() = default;
  BasisState(std::uint32_t bits_, int n_) : bits(bits_), n(n_) {
    if (n_ < 0 || n_ > 31) throw std::invalid_argument("BasisState: n out of range");
    if (n_ < 31 && bits_ >= (1u << n_))
      throw std::invalid_argument("BasisState: bits exceed 2^n - 1");
  }

  bool occupied(int j) const { return (bits >> j) & 1u; }
  int popcount() const { return std::popcount(bits); }

  // Text form z_{n-1} ... z_1 z_0 (vertex 0 rightmost).
  std::string to_string() const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int j = 0; j < n; ++j)
      if (occupied(j)) s[static_cast<std::size_t>(n - 1 - j)] = '1';
    return s;
  }

  static BasisState from_string(const std::string& s) {
    std::uint32_t bits = 0;
    const int n = static_cast<int>(s.size());
    for (int j = 0; j < n; ++j) {
      const char c = s[static_cast<std::size_t>(n - 1 - j)];
      if (c == '1')
        bits |= (1u << j);
      else if (c != '0')
        throw std::invalid_argument("BasisState: non-binary character");
    }
    return BasisState(bits, n);
  }
};

}  // namespace rydmis

#endif
