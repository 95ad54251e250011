#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace cusp {

/// Disjoint sets where every element also carries a parity bit relative to
/// its root. merge(a, b, p) records parity(a) xor parity(b) == p; a merge that
/// contradicts an existing relation is reported and leaves the sets unchanged.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t size() const { return parent_.size(); }

  /// Root of x and the parity of x relative to it.
  std::pair<std::size_t, int> find(std::size_t x) {
    int par = 0;
    std::size_t root = x;
    while (parent_[root] != root) {
      par ^= parity_[root];
      root = parent_[root];
    }
    // Path compression, recomputing parities along the way.
    int acc = par;
    while (parent_[x] != root) {
      const std::size_t next = parent_[x];
      const int old = parity_[x];
      parent_[x] = root;
      parity_[x] = acc;
      acc ^= old;
      x = next;
    }
    return {root, par};
  }

  /// Returns false iff a and b were already joined with the opposite parity.
  bool merge(std::size_t a, std::size_t b, int relative = 0) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == relative;
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ relative;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }

  bool same(std::size_t a, std::size_t b) { return find(a).first == find(b).first; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
  std::vector<int> rank_;
};

}  // namespace cusp
