#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cusp/triangulation.hpp"

namespace cusp {

/// One tetrahedron-edge in an edge class. `sign` is +1 when the class
/// orientation runs from the lower to the higher vertex label of the edge.
struct EdgeMember {
  std::size_t tet = 0;
  int edge = 0;
  int sign = 1;
};

struct EdgeClass {
  std::vector<EdgeMember> members;
  /// False if the edge is identified with itself in reverse.
  bool valid = true;

  std::size_t degree() const { return members.size(); }
};

struct VertexMember {
  std::size_t tet = 0;
  int vertex = 0;
};

struct VertexClass {
  std::vector<VertexMember> members;
};

struct SkeletonReport {
  std::vector<EdgeClass> edges;
  std::vector<VertexClass> vertices;
  std::size_t face_count = 0;
  /// edge_index[t][e] is the class of edge e of tetrahedron t.
  std::vector<std::array<std::size_t, 6>> edge_index;
  /// edge_sign[t][e] matches EdgeMember::sign.
  std::vector<std::array<int, 6>> edge_sign;
  std::vector<std::array<std::size_t, 4>> vertex_index;
};

/// Edge and vertex classes; classes are numbered by first appearance when
/// scanning tetrahedra in order, edges/vertices in label order.
/// Throws std::invalid_argument if the table is not involutive.
SkeletonReport skeleton(const Triangulation& tri);

struct LinkSurface {
  std::size_t triangles = 0;
  std::size_t edges = 0;
  std::size_t vertices = 0;
  long euler_characteristic = 0;
  bool orientable = true;
  bool connected = true;
  /// Every link edge is glued to another.
  bool closed = true;

  bool is_torus() const { return closed && connected && euler_characteristic == 0 && orientable; }
  bool is_klein_bottle() const {
    return closed && connected && euler_characteristic == 0 && !orientable;
  }
};

/// Surface formed by the corner triangles of the given vertex class.
LinkSurface vertex_link(const Triangulation& tri, const VertexClass& v);

/// Tetrahedra admit coherent orientations. Two tetrahedra oriented
/// alike must be glued by an odd permutation.
bool is_orientable(const Triangulation& tri);

/// Orientation (+1/-1) per tetrahedron from the same propagation; empty if
/// the triangulation is not orientable.
std::vector<int> orientation(const Triangulation& tri);

/// One step of the walk around an edge. `roles` sends 0,1 to the edge's
/// endpoints and 2,3 to the other two vertices; the walk leaves through the
/// face opposite roles[3].
struct EdgeStep {
  std::size_t tet = 0;
  Perm4 roles;
};

/// Walk around the edge starting at the given roles, stopping when the
/// start state recurs. Requires a closed involutive table.
std::vector<EdgeStep> edge_walk(const Triangulation& tri, EdgeStep start);

struct LinkReport {
  std::size_t vertex_class = 0;
  LinkSurface link;
};

struct ValidationReport {
  bool involutive = true;
  std::vector<FaceRef> involution_violations;
  bool closed = true;
  std::vector<FaceRef> unglued_faces;
  bool connected = true;
  /// Remaining fields are only filled in when the table is involutive.
  bool edges_valid = true;
  std::vector<std::size_t> invalid_edges;
  bool links_ok = true;
  std::vector<LinkReport> links;

  bool census_valid() const {
    return involutive && closed && connected && edges_valid && links_ok;
  }
};

ValidationReport validate(const Triangulation& tri);

/// Throws std::invalid_argument with a readable reason unless census-valid.
void require_census_valid(const Triangulation& tri);

}  // namespace cusp
