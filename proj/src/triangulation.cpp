#include "cusp/triangulation.hpp"

#include <stdexcept>
#include <string>

namespace cusp {

int edge_number(int a, int b) {
  if (a == b || a < 0 || b < 0 || a > 3 || b > 3) throw std::invalid_argument("not an edge");
  if (a > b) std::swap(a, b);
  // 01,02,03,12,13,23
  static constexpr int kTable[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return kTable[a][b];
}

std::size_t Triangulation::add_tetrahedron() {
  tets_.emplace_back();
  return tets_.size() - 1;
}

void Triangulation::join(std::size_t tet, int face, std::size_t target, Perm4 perm) {
  if (tet >= size() || target >= size()) throw std::out_of_range("tetrahedron index out of range");
  const int target_face = perm[face];
  if (tet == target && target_face == face)
    throw std::invalid_argument("face " + std::to_string(face) + " of tetrahedron " +
                                std::to_string(tet) + " cannot be glued to itself");
  if (tets_[tet][face] || tets_[target][target_face])
    throw std::invalid_argument("face already glued");
  tets_[tet][face] = Gluing{target, perm};
  tets_[target][target_face] = Gluing{tet, perm.inverse()};
}

void Triangulation::unjoin(std::size_t tet, int face) {
  auto& g = tets_.at(tet)[face];
  if (!g) return;
  auto& back = tets_.at(g->tet)[g->perm[face]];
  if (back && back->tet == tet && back->perm == g->perm.inverse()) back.reset();
  g.reset();
}

void Triangulation::set_gluing(std::size_t tet, int face, std::optional<Gluing> g) {
  tets_.at(tet)[face] = g;
}

bool Triangulation::is_involutive() const {
  for (std::size_t t = 0; t < size(); ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tets_[t][f];
      if (!g) continue;
      if (g->tet >= size()) return false;
      const int back_face = g->perm[f];
      if (g->tet == t && back_face == f) return false;
      const auto& back = tets_[g->tet][back_face];
      if (!back || back->tet != t || back->perm != g->perm.inverse()) return false;
    }
  return true;
}

bool Triangulation::is_closed() const {
  for (const auto& tet : tets_)
    for (const auto& g : tet)
      if (!g) return false;
  return true;
}

bool Triangulation::is_connected() const {
  if (tets_.empty()) return false;
  std::vector<char> seen(size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t t = stack.back();
    stack.pop_back();
    for (const auto& g : tets_[t]) {
      if (!g || g->tet >= size() || seen[g->tet]) continue;
      seen[g->tet] = 1;
      ++reached;
      stack.push_back(g->tet);
    }
  }
  return reached == size();
}

std::vector<FaceRef> Triangulation::faces() const {
  std::vector<FaceRef> out;
  for (std::size_t t = 0; t < size(); ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tets_[t][f];
      if (!g || FaceRef{t, f} <= FaceRef{g->tet, g->perm[f]}) out.push_back({t, f});
    }
  return out;
}

Isomorphism Isomorphism::identity(std::size_t n) {
  Isomorphism iso;
  iso.tet_map.resize(n);
  iso.vertex_maps.resize(n);
  for (std::size_t i = 0; i < n; ++i) iso.tet_map[i] = i;
  return iso;
}

Isomorphism Isomorphism::inverse() const {
  Isomorphism inv;
  inv.tet_map.resize(tet_map.size());
  inv.vertex_maps.resize(tet_map.size());
  for (std::size_t t = 0; t < tet_map.size(); ++t) {
    inv.tet_map[tet_map[t]] = t;
    inv.vertex_maps[tet_map[t]] = vertex_maps[t].inverse();
  }
  return inv;
}

Isomorphism Isomorphism::compose(const Isomorphism& first) const {
  Isomorphism out;
  out.tet_map.resize(first.tet_map.size());
  out.vertex_maps.resize(first.tet_map.size());
  for (std::size_t t = 0; t < first.tet_map.size(); ++t) {
    const std::size_t mid = first.tet_map[t];
    out.tet_map[t] = tet_map.at(mid);
    out.vertex_maps[t] = vertex_maps.at(mid) * first.vertex_maps[t];
  }
  return out;
}

Triangulation apply(const Isomorphism& iso, const Triangulation& tri) {
  if (iso.tet_map.size() != tri.size()) throw std::invalid_argument("isomorphism size mismatch");
  Triangulation out(tri.size());
  for (std::size_t t = 0; t < tri.size(); ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (!g) continue;
      const Perm4& src = iso.vertex_maps[t];
      const Perm4 perm = iso.vertex_maps[g->tet] * g->perm * src.inverse();
      out.set_gluing(iso.tet_map[t], src[f], Gluing{iso.tet_map[g->tet], perm});
    }
  return out;
}

bool transports(const Isomorphism& iso, const Triangulation& from, const Triangulation& to) {
  if (from.size() != to.size() || iso.tet_map.size() != from.size()) return false;
  std::vector<char> hit(from.size(), 0);
  for (std::size_t t : iso.tet_map) {
    if (t >= to.size() || hit[t]) return false;
    hit[t] = 1;
  }
  return apply(iso, from) == to;
}

}  // namespace cusp
