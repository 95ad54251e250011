#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "cusp/triangulation.hpp"

namespace cusp {

// Faces are addressed by their index in Triangulation::faces(), edges by
// their class index in skeleton(). Every move keeps the untouched
// tetrahedra in their original order and appends the new ones at the end.

enum class MoveKind { Pachner23 = 0, Pachner32 = 1, Move44 = 2 };

struct MoveDescriptor {
  MoveKind kind = MoveKind::Pachner23;
  std::size_t location = 0;
  int choice = 0;

  std::string str() const;

  friend bool operator==(const MoveDescriptor&, const MoveDescriptor&) = default;
  friend auto operator<=>(const MoveDescriptor&, const MoveDescriptor&) = default;
};

/// Replaces the two distinct tetrahedra on either side of the face with
/// three around a new degree-three edge. Throws std::invalid_argument if the
/// face is unglued or joins a tetrahedron to itself.
Triangulation pachner_23(const Triangulation& tri, std::size_t face);

/// Replaces the three distinct tetrahedra around a degree-three edge with
/// two. Throws std::invalid_argument otherwise.
Triangulation pachner_32(const Triangulation& tri, std::size_t edge);

/// Retriangulates the octahedron around a degree-four edge with four
/// distinct tetrahedra about a different axis.
///
/// The walk around the edge starts in its lowest-numbered tetrahedron with
/// the edge's endpoints in increasing label order; the link vertices met
/// are P0, P1, P2, P3, where P0 and P1 are the larger and smaller remaining
/// labels of that first tetrahedron. Choice 0 uses axis P0P2, choice 1 P1P3.
Triangulation move_44(const Triangulation& tri, std::size_t edge, int choice);

/// Location of the new degree-three edge created by pachner_23.
TetEdge pachner_23_new_edge(const Triangulation& tri);

/// The same 4-4 move expressed as a 2-3 move followed by a 3-2 move.
struct PachnerPair {
  std::size_t face = 0;          ///< 2-3 location in the input
  Triangulation intermediate;    ///< after the 2-3 move
  std::size_t edge = 0;          ///< 3-2 location in the intermediate
  Triangulation result;
};
PachnerPair move_44_as_pachner_pair(const Triangulation& tri, std::size_t edge, int choice);

bool can_pachner_23(const Triangulation& tri, std::size_t face);
bool can_pachner_32(const Triangulation& tri, std::size_t edge);
bool can_move_44(const Triangulation& tri, std::size_t edge);

Triangulation apply_move(const Triangulation& tri, const MoveDescriptor& move);

/// Every admissible 2-3 and 3-2 move, in descriptor order. 2-3 moves are
/// omitted when the result would exceed `max_tets` tetrahedra.
std::vector<MoveDescriptor> pachner_moves(const Triangulation& tri, std::size_t max_tets);

}  // namespace cusp
