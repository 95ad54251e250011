#include "cusp/moves.hpp"

#include <algorithm>
#include <stdexcept>

#include "cusp/skeleton.hpp"

namespace cusp {

namespace {

using Names = std::array<int, 4>;
using Triple = std::array<int, 3>;

// A ball of tetrahedra to be swapped out. Vertices of the ball are given
// small integer names; every old and new tetrahedron lists the name of each
// of its vertex labels.
struct Ball {
  std::vector<std::size_t> old_tets;
  std::vector<Names> old_names;
  std::vector<Names> new_tets;
};

Triple face_triple(const Names& names, int face) {
  Triple t{};
  int k = 0;
  for (int i = 0; i < 4; ++i)
    if (i != face) t[k++] = names[i];
  std::sort(t.begin(), t.end());
  return t;
}

int label_with_name(const Names& names, int name) {
  for (int i = 0; i < 4; ++i)
    if (names[i] == name) return i;
  throw std::logic_error("name not present in tetrahedron");
}

Triangulation retriangulate(const Triangulation& tri, const Ball& ball) {
  const std::size_t n = tri.size();
  constexpr std::size_t kRemoved = static_cast<std::size_t>(-1);
  std::vector<std::size_t> new_index(n, 0);
  std::vector<int> ball_pos(n, -1);
  for (std::size_t i = 0; i < ball.old_tets.size(); ++i) {
    new_index[ball.old_tets[i]] = kRemoved;
    ball_pos[ball.old_tets[i]] = static_cast<int>(i);
  }
  std::size_t kept = 0;
  for (std::size_t t = 0; t < n; ++t)
    if (new_index[t] != kRemoved) new_index[t] = kept++;

  Triangulation out(kept + ball.new_tets.size());
  for (std::size_t t = 0; t < n; ++t) {
    if (new_index[t] == kRemoved) continue;
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (g && new_index[g->tet] != kRemoved)
        out.set_gluing(new_index[t], f, Gluing{new_index[g->tet], g->perm});
    }
  }

  auto find_new_face = [&](const Triple& key, std::size_t skip) -> std::pair<std::size_t, int> {
    for (std::size_t j = 0; j < ball.new_tets.size(); ++j) {
      if (j == skip) continue;
      for (int f = 0; f < 4; ++f)
        if (face_triple(ball.new_tets[j], f) == key) return {j, f};
    }
    return {kRemoved, -1};
  };

  for (std::size_t j = 0; j < ball.new_tets.size(); ++j) {
    const Names& nj = ball.new_tets[j];
    for (int f = 0; f < 4; ++f) {
      const Triple key = face_triple(nj, f);
      const auto [j2, f2] = find_new_face(key, j);
      if (j2 != kRemoved) {
        std::array<int, 4> img{};
        for (int x = 0; x < 4; ++x) img[x] = (x == f) ? f2 : label_with_name(ball.new_tets[j2], nj[x]);
        out.set_gluing(kept + j, f, Gluing{kept + j2, Perm4(img[0], img[1], img[2], img[3])});
        continue;
      }
      // Boundary face of the ball: find the old face it replaces.
      std::size_t r = kRemoved;
      int g = -1;
      for (std::size_t i = 0; i < ball.old_tets.size(); ++i)
        for (int h = 0; h < 4; ++h)
          if (face_triple(ball.old_names[i], h) == key) {
            if (r != kRemoved) throw std::logic_error("ambiguous ball boundary face");
            r = i;
            g = h;
          }
      if (r == kRemoved) throw std::logic_error("ball boundary face has no old counterpart");
      const auto& outside = tri.gluing(ball.old_tets[r], g);
      if (!outside) throw std::invalid_argument("move region touches an unglued face");
      const Perm4& q = outside->perm;
      std::array<int, 4> via_old{};  // new label -> label in the outside tetrahedron
      for (int x = 0; x < 4; ++x)
        via_old[x] = (x == f) ? q[g] : q[label_with_name(ball.old_names[r], nj[x])];

      if (new_index[outside->tet] != kRemoved) {
        const Perm4 p(via_old[0], via_old[1], via_old[2], via_old[3]);
        out.set_gluing(kept + j, f, Gluing{new_index[outside->tet], p});
        out.set_gluing(new_index[outside->tet], p[f], Gluing{kept + j, p.inverse()});
        continue;
      }
      // Glued to another boundary face of the ball.
      const int u = ball_pos[outside->tet];
      const Names& nu = ball.old_names[u];
      const auto [j3, f3] = find_new_face(face_triple(nu, q[g]), kRemoved);
      if (j3 == kRemoved) throw std::logic_error("ball self-gluing lost");
      std::array<int, 4> img{};
      for (int x = 0; x < 4; ++x)
        img[x] = (x == f) ? f3 : label_with_name(ball.new_tets[j3], nu[via_old[x]]);
      out.set_gluing(kept + j, f, Gluing{kept + j3, Perm4(img[0], img[1], img[2], img[3])});
    }
  }
  if (!out.is_involutive()) throw std::logic_error("retriangulation broke the face pairing");
  return out;
}

// Walk around an edge class, starting from its lowest-numbered tetrahedron.
// Returns nothing unless the edge has the given degree and meets that many
// distinct tetrahedra.
std::optional<std::vector<EdgeStep>> embedded_walk(const Triangulation& tri, std::size_t edge,
                                                   std::size_t degree) {
  if (!tri.is_involutive() || !tri.is_closed()) return std::nullopt;
  const SkeletonReport sk = skeleton(tri);
  if (edge >= sk.edges.size()) return std::nullopt;
  const EdgeClass& ec = sk.edges[edge];
  if (!ec.valid || ec.degree() != degree) return std::nullopt;
  std::vector<std::size_t> tets;
  for (const auto& m : ec.members) tets.push_back(m.tet);
  std::sort(tets.begin(), tets.end());
  if (std::adjacent_find(tets.begin(), tets.end()) != tets.end()) return std::nullopt;
  const EdgeMember& first = ec.members.front();  // lowest tet: members are scanned in order
  const auto [a, b] = kEdgeVertices[first.edge];
  const auto [c, d] = kEdgeVertices[5 - first.edge];
  auto steps = edge_walk(tri, EdgeStep{first.tet, Perm4(a, b, c, d)});
  if (steps.size() != degree) return std::nullopt;
  return steps;
}

// Names around an edge walk: 0,1 for the endpoints, 2+m for link vertex Pm.
std::vector<Names> walk_names(const std::vector<EdgeStep>& steps) {
  const int d = static_cast<int>(steps.size());
  std::vector<Names> names;
  for (int m = 0; m < d; ++m) {
    Names nm{};
    const Perm4& r = steps[m].roles;
    nm[r[0]] = 0;
    nm[r[1]] = 1;
    nm[r[3]] = 2 + m;
    nm[r[2]] = 2 + (m + 1) % d;
    names.push_back(nm);
  }
  return names;
}

Ball walk_ball(const std::vector<EdgeStep>& steps) {
  Ball ball;
  for (const auto& s : steps) ball.old_tets.push_back(s.tet);
  ball.old_names = walk_names(steps);
  return ball;
}

}  // namespace

std::string MoveDescriptor::str() const {
  switch (kind) {
    case MoveKind::Pachner23: return "2-3 face " + std::to_string(location);
    case MoveKind::Pachner32: return "3-2 edge " + std::to_string(location);
    case MoveKind::Move44:
      return "4-4 edge " + std::to_string(location) + " choice " + std::to_string(choice);
  }
  return "?";
}

bool can_pachner_23(const Triangulation& tri, std::size_t face) {
  const auto faces = tri.faces();
  if (face >= faces.size()) return false;
  const auto& g = tri.gluing(faces[face].tet, faces[face].face);
  return g && g->tet != faces[face].tet;
}

bool can_pachner_32(const Triangulation& tri, std::size_t edge) {
  return embedded_walk(tri, edge, 3).has_value();
}

bool can_move_44(const Triangulation& tri, std::size_t edge) {
  return embedded_walk(tri, edge, 4).has_value();
}

Triangulation pachner_23(const Triangulation& tri, std::size_t face) {
  const auto faces = tri.faces();
  if (face >= faces.size()) throw std::invalid_argument("no face " + std::to_string(face));
  const FaceRef top = faces[face];
  const auto& g = tri.gluing(top.tet, top.face);
  if (!g) throw std::invalid_argument("face " + std::to_string(face) + " is on the boundary");
  if (g->tet == top.tet)
    throw std::invalid_argument("face " + std::to_string(face) + " joins a tetrahedron to itself");
  // Names: the shared triangle's vertices 0,1,2; apex of top 3; apex of bottom 4.
  Ball ball;
  ball.old_tets = {top.tet, g->tet};
  Names upper{}, lower{};
  int k = 0;
  for (int x = 0; x < 4; ++x) {
    if (x == top.face) continue;
    upper[x] = k;
    lower[g->perm[x]] = k;
    ++k;
  }
  upper[top.face] = 3;
  lower[g->perm[top.face]] = 4;
  ball.old_names = {upper, lower};
  ball.new_tets = {Names{3, 4, 0, 1}, Names{3, 4, 1, 2}, Names{3, 4, 2, 0}};
  return retriangulate(tri, ball);
}

TetEdge pachner_23_new_edge(const Triangulation& tri) {
  // The first appended tetrahedron has the new edge on labels 0,1.
  return TetEdge{tri.size() - 3, 0};
}

Triangulation pachner_32(const Triangulation& tri, std::size_t edge) {
  const auto steps = embedded_walk(tri, edge, 3);
  if (!steps)
    throw std::invalid_argument("edge " + std::to_string(edge) +
                                " does not have degree 3 with three distinct tetrahedra");
  Ball ball = walk_ball(*steps);
  ball.new_tets = {Names{0, 2, 3, 4}, Names{1, 2, 3, 4}};
  return retriangulate(tri, ball);
}

Triangulation move_44(const Triangulation& tri, std::size_t edge, int choice) {
  if (choice != 0 && choice != 1) throw std::invalid_argument("4-4 choice must be 0 or 1");
  const auto steps = embedded_walk(tri, edge, 4);
  if (!steps)
    throw std::invalid_argument("edge " + std::to_string(edge) +
                                " does not have degree 4 with four distinct tetrahedra");
  Ball ball = walk_ball(*steps);
  // Axis (2+choice, 4+choice); its link cycles through 0, 3-choice, 1, 5-choice.
  const int p = 2 + choice, q = 4 + choice;
  const int s = 3 - choice, t = 5 - choice;
  // Order: P(choice) P(choice+2) E0 ... as documented for the axis.
  const int link[4] = {0, choice == 0 ? s : t, 1, choice == 0 ? t : s};
  for (int i = 0; i < 4; ++i) ball.new_tets.push_back(Names{p, q, link[i], link[(i + 1) % 4]});
  return retriangulate(tri, ball);
}

PachnerPair move_44_as_pachner_pair(const Triangulation& tri, std::size_t edge, int choice) {
  if (choice != 0 && choice != 1) throw std::invalid_argument("4-4 choice must be 0 or 1");
  const auto steps = embedded_walk(tri, edge, 4);
  if (!steps)
    throw std::invalid_argument("edge " + std::to_string(edge) +
                                " does not have degree 4 with four distinct tetrahedra");
  // Step m's tetrahedron holds P(m) and P(m+1); it leaves through the face
  // {E0,E1,P(m+1)}. A 2-3 on the face between steps `choice` and `choice+1`
  // creates the axis P(choice)P(choice+2). The old edge survives in the
  // untouched tetrahedron at step choice+2.
  const EdgeStep& s = (*steps)[choice];
  const FaceRef shared{s.tet, s.roles[3]};
  const auto faces = tri.faces();
  std::size_t face_index = faces.size();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& g = tri.gluing(faces[i].tet, faces[i].face);
    if (faces[i] == shared || (g && FaceRef{g->tet, g->perm[faces[i].face]} == shared)) face_index = i;
  }
  PachnerPair out;
  out.face = face_index;
  out.intermediate = pachner_23(tri, face_index);

  const EdgeStep& survivor = (*steps)[choice + 2];
  const FaceRef& removed_a = shared;
  const std::size_t removed_b = tri.gluing(shared.tet, shared.face)->tet;
  std::size_t idx = survivor.tet;
  if (removed_a.tet < survivor.tet) --idx;
  if (removed_b < survivor.tet) --idx;
  const SkeletonReport sk = skeleton(out.intermediate);
  out.edge = sk.edge_index[idx][edge_number(survivor.roles[0], survivor.roles[1])];
  out.result = pachner_32(out.intermediate, out.edge);
  return out;
}

Triangulation apply_move(const Triangulation& tri, const MoveDescriptor& move) {
  switch (move.kind) {
    case MoveKind::Pachner23: return pachner_23(tri, move.location);
    case MoveKind::Pachner32: return pachner_32(tri, move.location);
    case MoveKind::Move44: return move_44(tri, move.location, move.choice);
  }
  throw std::invalid_argument("unknown move kind");
}

std::vector<MoveDescriptor> pachner_moves(const Triangulation& tri, std::size_t max_tets) {
  std::vector<MoveDescriptor> out;
  if (tri.size() + 1 <= max_tets) {
    const auto faces = tri.faces();
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (can_pachner_23(tri, i)) out.push_back({MoveKind::Pachner23, i, 0});
  }
  const SkeletonReport sk = skeleton(tri);
  for (std::size_t e = 0; e < sk.edges.size(); ++e)
    if (sk.edges[e].degree() == 3 && can_pachner_32(tri, e))
      out.push_back({MoveKind::Pachner32, e, 0});
  return out;
}

}  // namespace cusp
