#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rinclose/matrix.hpp"

namespace rinclose {

/// Small undirected simple graph on vertices 0..n-1 with bit-set adjacency rows.
class UndirectedGraph {
 public:
  explicit UndirectedGraph(std::size_t vertices);

  std::size_t size() const noexcept { return n_; }
  /// Adds {u, v}; self-loops are ignored. Throws std::out_of_range.
  void add_edge(Index u, Index v);
  bool adjacent(Index u, Index v) const noexcept {
    return (adj_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  std::size_t edge_count() const noexcept;

  /// Word-level access for set algebra: row u spans words() words.
  const std::uint64_t* row(Index u) const noexcept { return adj_.data() + u * words_; }
  std::size_t words() const noexcept { return words_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> adj_;
};

/// Bron-Kerbosch with Tomita/Koch pivoting (the pivot maximizes neighbours
/// inside the candidate set). Every maximal clique once, each sorted, the
/// list sorted lexicographically. Isolated vertices come out as singletons.
std::vector<IndexList> maximal_cliques(const UndirectedGraph& graph);

}  // namespace rinclose
