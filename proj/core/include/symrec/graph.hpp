#pragma once

#include "symrec/perm.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symrec {

// Simple graph on vertices 0..n-1 with adjacency rows as bit masks.
// Undirected edge bits follow pairs (i, j), i < j, in lexicographic order;
// directed bits follow ordered pairs (i, j), i != j, in lexicographic order.
class GraphInstance {
 public:
  GraphInstance() = default;
  GraphInstance(unsigned n, bool directed);

  static GraphInstance from_bits(unsigned n, std::uint64_t bits, bool directed = false);
  static GraphInstance complete(unsigned n);
  // First line n, then one "i j" per line (1-based), or a single hex token
  // (optionally 0x-prefixed) holding the edge-bit vector after the n line.
  static GraphInstance parse(std::string_view text, bool directed = false);

  unsigned n() const { return n_; }
  bool directed() const { return directed_; }
  std::size_t pair_count() const;

  bool has_edge(unsigned i, unsigned j) const { return (adj_[i] >> j) & 1u; }
  void set_edge(unsigned i, unsigned j, bool present = true);
  std::uint64_t row(unsigned i) const { return adj_[i]; }

  unsigned degree(unsigned v) const;
  std::size_t edge_count() const;
  std::uint64_t to_bits() const;

  GraphInstance complement() const;
  // Edge {g(i), g(j)} present iff {i, j} present.
  GraphInstance relabeled(const Permutation& g) const;

  std::string to_text() const;

  friend bool operator==(const GraphInstance& a, const GraphInstance& b) = default;

 private:
  unsigned n_ = 0;
  bool directed_ = false;
  std::vector<std::uint64_t> adj_;
};

// Bit position of the undirected pair {i, j} (i != j) in the edge layout.
unsigned pair_bit(unsigned n, unsigned i, unsigned j);
// Bit position of the ordered pair (i, j) in the directed layout.
unsigned arc_bit(unsigned n, unsigned i, unsigned j);

// Number of k-subsets of vertices forming a clique.
std::uint64_t count_k_cliques(const GraphInstance& g, unsigned k);

}  // namespace symrec
