#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "cusp/perm4.hpp"

namespace cusp {

/// Face `f` of a tetrahedron (the face opposite vertex `f`) is glued to face
/// `perm[f]` of `tet`; `perm` carries source vertex labels to target labels.
struct Gluing {
  std::size_t tet = 0;
  Perm4 perm;

  friend bool operator==(const Gluing&, const Gluing&) = default;
};

/// A face of a specific tetrahedron.
struct FaceRef {
  std::size_t tet = 0;
  int face = 0;

  friend bool operator==(const FaceRef&, const FaceRef&) = default;
  friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

/// The six edges of a tetrahedron, numbered 0..5 as 01,02,03,12,13,23.
/// Edge e and edge 5-e are opposite.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Edge number joining two distinct vertex labels.
int edge_number(int a, int b);

/// An edge of a specific tetrahedron.
struct TetEdge {
  std::size_t tet = 0;
  int edge = 0;

  friend bool operator==(const TetEdge&, const TetEdge&) = default;
  friend auto operator<=>(const TetEdge&, const TetEdge&) = default;
};

/// A gluing table: n tetrahedra, each with four optionally glued faces.
///
/// `join` maintains the involution (both sides are written). `set_gluing`
/// writes one side only and exists so that broken tables read from disk can
/// be represented and then diagnosed by validate().
class Triangulation {
 public:
  Triangulation() = default;
  explicit Triangulation(std::size_t tetrahedra) : tets_(tetrahedra) {}

  std::size_t size() const { return tets_.size(); }
  bool empty() const { return tets_.empty(); }

  std::size_t add_tetrahedron();

  const std::optional<Gluing>& gluing(std::size_t tet, int face) const {
    return tets_.at(tet)[face];
  }

  /// Glues face `face` of `tet` to face perm[face] of `target`, writing both
  /// directions. Throws std::invalid_argument if either face is already glued
  /// or a face would be glued to itself.
  void join(std::size_t tet, int face, std::size_t target, Perm4 perm);
  /// Removes the gluing on both sides (if involutive).
  void unjoin(std::size_t tet, int face);
  /// Raw one-sided write.
  void set_gluing(std::size_t tet, int face, std::optional<Gluing> g);

  /// Faces are paired with their gluing partners.
  bool is_involutive() const;
  /// No face is unglued.
  bool is_closed() const;
  /// Face-pairing graph is connected (the empty triangulation is not).
  bool is_connected() const;

  /// One representative per glued face pair, (t,f) < partner, in order.
  /// Unglued faces are listed too. Index into this list is the face handle.
  std::vector<FaceRef> faces() const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  std::vector<std::array<std::optional<Gluing>, 4>> tets_;
};

/// Relabeling of a triangulation: tetrahedron t goes to tet_map[t], with
/// its vertex labels carried by vertex_maps[t].
struct Isomorphism {
  std::vector<std::size_t> tet_map;
  std::vector<Perm4> vertex_maps;

  Isomorphism inverse() const;
  /// (*this) after `first`.
  Isomorphism compose(const Isomorphism& first) const;
  static Isomorphism identity(std::size_t n);

  friend bool operator==(const Isomorphism&, const Isomorphism&) = default;
};

/// Image of `tri` under `iso`.
Triangulation apply(const Isomorphism& iso, const Triangulation& tri);

/// True iff `iso` carries the gluing table of `from` exactly onto `to`.
bool transports(const Isomorphism& iso, const Triangulation& from, const Triangulation& to);

}  // namespace cusp
