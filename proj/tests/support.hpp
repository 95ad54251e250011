#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "cusp/builders.hpp"
#include "cusp/triangulation.hpp"

namespace testing {

struct Named {
  std::string name;
  cusp::Triangulation tri;
};

inline std::vector<Named> built_triangulations() {
  const auto x101 = cusp::build_x101().tri;
  return {
      {"x101", x101},
      {"x103_0", cusp::build_x103(0)},
      {"x103_1", cusp::build_x103(1)},
      {"figure8", cusp::figure_eight()},
      {"x101_cover", cusp::double_cover(x101)},
  };
}

// Plain BFS over corner identifications, no union-find. Returns class ids
// per (tet, item) and, for edges, whether some class meets itself reversed.
struct FloodClasses {
  std::vector<std::vector<int>> id;
  int count = 0;
  bool conflict = false;
};

inline FloodClasses flood_edges(const cusp::Triangulation& tri) {
  const std::size_t n = tri.size();
  FloodClasses out;
  out.id.assign(n, std::vector<int>(6, -1));
  // direction[t][e] = +1 if class orientation goes low->high label
  std::vector<std::array<int, 6>> dir(n);
  for (std::size_t t0 = 0; t0 < n; ++t0)
    for (int e0 = 0; e0 < 6; ++e0) {
      if (out.id[t0][e0] >= 0) continue;
      const int c = out.count++;
      std::queue<std::pair<std::size_t, int>> q;
      out.id[t0][e0] = c;
      dir[t0][e0] = 1;
      q.push({t0, e0});
      while (!q.empty()) {
        auto [t, e] = q.front();
        q.pop();
        const int a = cusp::kEdgeVertices[e][0], b = cusp::kEdgeVertices[e][1];
        for (int f = 0; f < 4; ++f) {
          if (f == a || f == b) continue;
          const auto& g = tri.gluing(t, f);
          if (!g) continue;
          const int ia = g->perm[a], ib = g->perm[b];
          const int e2 = cusp::edge_number(ia, ib);
          const int d2 = (ia < ib ? 1 : -1) * dir[t][e];
          if (out.id[g->tet][e2] < 0) {
            out.id[g->tet][e2] = c;
            dir[g->tet][e2] = d2;
            q.push({g->tet, e2});
          } else if (dir[g->tet][e2] != d2) {
            out.conflict = true;
          }
        }
      }
    }
  return out;
}

inline FloodClasses flood_vertices(const cusp::Triangulation& tri) {
  const std::size_t n = tri.size();
  FloodClasses out;
  out.id.assign(n, std::vector<int>(4, -1));
  for (std::size_t t0 = 0; t0 < n; ++t0)
    for (int v0 = 0; v0 < 4; ++v0) {
      if (out.id[t0][v0] >= 0) continue;
      const int c = out.count++;
      std::queue<std::pair<std::size_t, int>> q;
      out.id[t0][v0] = c;
      q.push({t0, v0});
      while (!q.empty()) {
        auto [t, v] = q.front();
        q.pop();
        for (int f = 0; f < 4; ++f) {
          if (f == v) continue;
          const auto& g = tri.gluing(t, f);
          if (!g) continue;
          const int w = g->perm[v];
          if (out.id[g->tet][w] < 0) {
            out.id[g->tet][w] = c;
            q.push({g->tet, w});
          }
        }
      }
    }
  return out;
}

// Same partition up to renaming of class ids.
template <typename A, typename B>
bool same_partition(const A& a, const B& b, std::size_t n, std::size_t k) {
  std::map<long, long> fwd, back;
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t i = 0; i < k; ++i) {
      const long x = static_cast<long>(a[t][i]), y = static_cast<long>(b[t][i]);
      auto [it1, new1] = fwd.emplace(x, y);
      auto [it2, new2] = back.emplace(y, x);
      if (it1->second != y || it2->second != x) return false;
    }
  return true;
}

}  // namespace testing
