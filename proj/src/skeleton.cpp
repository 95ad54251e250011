#include "cusp/skeleton.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cusp/union_find.hpp"

namespace cusp {

namespace {

// Parity of a gluing restricted to the three labels other than `v`, each
// side listed in increasing order. 0 = even, 1 = odd.
int restricted_parity(int v, const Perm4& p) {
  int src[3];
  int k = 0;
  for (int i = 0; i < 4; ++i)
    if (i != v) src[k++] = p[i];
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (src[i] > src[j]) ++inversions;
  return inversions & 1;
}

}  // namespace

SkeletonReport skeleton(const Triangulation& tri) {
  if (!tri.is_involutive()) throw std::invalid_argument("gluing table is not involutive");
  const std::size_t n = tri.size();

  ParityUnionFind edges(6 * n);
  std::vector<char> edge_self_reversed(6 * n, 0);
  ParityUnionFind verts(4 * n);
  std::size_t face_sides = 0;

  for (std::size_t t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (!g) {
        face_sides += 2;  // a boundary face counts once
        continue;
      }
      ++face_sides;
      const Perm4& p = g->perm;
      for (int v = 0; v < 4; ++v)
        if (v != f) verts.merge(4 * t + v, 4 * g->tet + p[v]);
      for (int e = 0; e < 6; ++e) {
        const int a = kEdgeVertices[e][0];
        const int b = kEdgeVertices[e][1];
        if (a == f || b == f) continue;
        const int reversed = p[a] > p[b] ? 1 : 0;
        if (!edges.merge(6 * t + e, 6 * g->tet + edge_number(p[a], p[b]), reversed))
          edge_self_reversed[6 * t + e] = 1;
      }
    }

  SkeletonReport out;
  out.face_count = face_sides / 2;
  out.edge_index.resize(n);
  out.edge_sign.resize(n);
  out.vertex_index.resize(n);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of_root(6 * n, kNone);
  std::vector<int> root_parity_of_first(6 * n, 0);
  for (std::size_t t = 0; t < n; ++t)
    for (int e = 0; e < 6; ++e) {
      const auto [root, par] = edges.find(6 * t + e);
      if (class_of_root[root] == kNone) {
        class_of_root[root] = out.edges.size();
        root_parity_of_first[root] = par;
        out.edges.emplace_back();
      }
      const std::size_t c = class_of_root[root];
      const int sign = (par == root_parity_of_first[root]) ? 1 : -1;
      out.edges[c].members.push_back({t, e, sign});
      out.edge_index[t][e] = c;
      out.edge_sign[t][e] = sign;
    }
  for (std::size_t i = 0; i < 6 * n; ++i)
    if (edge_self_reversed[i]) out.edges[class_of_root[edges.find(i).first]].valid = false;

  std::vector<std::size_t> vclass_of_root(4 * n, kNone);
  for (std::size_t t = 0; t < n; ++t)
    for (int v = 0; v < 4; ++v) {
      const std::size_t root = verts.find(4 * t + v).first;
      if (vclass_of_root[root] == kNone) {
        vclass_of_root[root] = out.vertices.size();
        out.vertices.emplace_back();
      }
      out.vertices[vclass_of_root[root]].members.push_back({t, v});
      out.vertex_index[t][v] = vclass_of_root[root];
    }
  return out;
}

LinkSurface vertex_link(const Triangulation& tri, const VertexClass& vc) {
  LinkSurface link;
  const std::size_t n = tri.size();
  // Index corners of this class.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> corner(4 * n, kNone);
  for (std::size_t i = 0; i < vc.members.size(); ++i)
    corner[4 * vc.members[i].tet + vc.members[i].vertex] = i;
  const std::size_t m = vc.members.size();
  link.triangles = m;

  // Link vertex (corner i, other label w) -> 4*i + w; w == own vertex unused.
  ParityUnionFind link_verts(4 * m);
  ParityUnionFind triangles(m);
  std::size_t edge_sides = 0;
  std::size_t boundary_edges = 0;

  for (std::size_t i = 0; i < m; ++i) {
    const auto [t, v] = vc.members[i];
    for (int f = 0; f < 4; ++f) {
      if (f == v) continue;
      const auto& g = tri.gluing(t, f);
      if (!g) {
        ++boundary_edges;
        link.closed = false;
        continue;
      }
      ++edge_sides;
      const Perm4& p = g->perm;
      const std::size_t j = corner[4 * g->tet + p[v]];
      if (j == kNone) throw std::logic_error("vertex class is not closed under gluings");
      for (int w = 0; w < 4; ++w)
        if (w != v && w != f) link_verts.merge(4 * i + w, 4 * j + p[w]);
      const int coherent_if_same = restricted_parity(v, p);  // odd -> same sign
      if (!triangles.merge(i, j, coherent_if_same ? 0 : 1)) link.orientable = false;
    }
  }

  link.edges = edge_sides / 2 + boundary_edges;
  std::vector<char> root_seen(4 * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const int v = vc.members[i].vertex;
    for (int w = 0; w < 4; ++w) {
      if (w == v) continue;
      const std::size_t r = link_verts.find(4 * i + w).first;
      if (!root_seen[r]) {
        root_seen[r] = 1;
        ++link.vertices;
      }
    }
  }
  link.euler_characteristic = static_cast<long>(link.vertices) - static_cast<long>(link.edges) +
                              static_cast<long>(link.triangles);
  for (std::size_t i = 1; i < m; ++i)
    if (!triangles.same(0, i)) link.connected = false;
  return link;
}

std::vector<int> orientation(const Triangulation& tri) {
  const std::size_t n = tri.size();
  std::vector<int> sign(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const std::size_t t = stack.back();
      stack.pop_back();
      for (int f = 0; f < 4; ++f) {
        const auto& g = tri.gluing(t, f);
        if (!g) continue;
        // Odd gluing: same orientation; even gluing: opposite.
        const int want = (g->perm.sign() < 0) ? sign[t] : -sign[t];
        if (sign[g->tet] == 0) {
          sign[g->tet] = want;
          stack.push_back(g->tet);
        } else if (sign[g->tet] != want) {
          return {};
        }
      }
    }
  }
  return sign;
}

bool is_orientable(const Triangulation& tri) { return tri.empty() || !orientation(tri).empty(); }

std::vector<EdgeStep> edge_walk(const Triangulation& tri, EdgeStep start) {
  std::vector<EdgeStep> steps;
  EdgeStep cur = start;
  const std::size_t limit = 6 * tri.size() * 4 + 1;
  do {
    steps.push_back(cur);
    const auto& g = tri.gluing(cur.tet, cur.roles[3]);
    if (!g) throw std::invalid_argument("edge walk reached an unglued face");
    cur = EdgeStep{g->tet, g->perm * cur.roles * Perm4::swap(2, 3)};
    if (steps.size() > limit) throw std::logic_error("edge walk did not close");
  } while (!(cur.tet == start.tet && cur.roles == start.roles));
  return steps;
}

ValidationReport validate(const Triangulation& tri) {
  ValidationReport r;
  for (std::size_t t = 0; t < tri.size(); ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (!g) {
        r.closed = false;
        r.unglued_faces.push_back({t, f});
        continue;
      }
      bool ok = g->tet < tri.size();
      if (ok) {
        const int back_face = g->perm[f];
        const auto& back = tri.gluing(g->tet, back_face);
        ok = !(g->tet == t && back_face == f) && back && back->tet == t &&
             back->perm == g->perm.inverse();
      }
      if (!ok) {
        r.involutive = false;
        r.involution_violations.push_back({t, f});
      }
    }
  r.connected = tri.is_connected();
  if (!r.involutive) {
    r.edges_valid = false;
    r.links_ok = false;
    return r;
  }
  const SkeletonReport sk = skeleton(tri);
  for (std::size_t e = 0; e < sk.edges.size(); ++e)
    if (!sk.edges[e].valid) {
      r.edges_valid = false;
      r.invalid_edges.push_back(e);
    }
  for (std::size_t v = 0; v < sk.vertices.size(); ++v) {
    LinkReport lr{v, vertex_link(tri, sk.vertices[v])};
    if (!(lr.link.closed && lr.link.connected && lr.link.euler_characteristic == 0))
      r.links_ok = false;
    r.links.push_back(lr);
  }
  return r;
}

void require_census_valid(const Triangulation& tri) {
  const ValidationReport r = validate(tri);
  if (r.census_valid()) return;
  std::string why;
  if (!r.involutive) why = "gluing table is not involutive";
  else if (!r.closed) why = "triangulation has unglued faces";
  else if (!r.connected) why = "triangulation is not connected";
  else if (!r.edges_valid) why = "an edge is identified with itself in reverse";
  else why = "a vertex link is not a torus or Klein bottle";
  throw std::invalid_argument("invalid ideal triangulation: " + why);
}

}  // namespace cusp
