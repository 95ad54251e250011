#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cusp/triangulation.hpp"

namespace cusp {

/// A square on the boundary of a cube complex: four corners in cyclic order,
/// its two boundary triangles and the diagonal they share.
struct Square {
  std::array<char, 4> corners{};
  std::array<FaceRef, 2> triangles{};
  std::array<char, 2> diagonal{};

  std::string name() const { return std::string(corners.begin(), corners.end()); }
};

/// A triangulated cube with vertices A..H (ABCD and EFGH opposite, with
/// A-E, B-F, C-G, D-H the vertical edges). Every tetrahedron remembers which
/// cube vertex each of its labels sits on.
struct CubeComplex {
  Triangulation tri;
  std::vector<std::array<char, 4>> names;
  /// Squares whose triangles are still unglued.
  std::vector<Square> squares;
  /// Set by layer_on_square: the old diagonal, now an interior edge.
  std::optional<TetEdge> layered_diagonal;

  /// Looks a square up by its corner set, e.g. "CGFB" finds BCGF.
  const Square* find_square(std::string_view corners) const;
};

/// Corner i of `source` is sent to corner i of `target`.
struct SquareMap {
  std::string source;
  std::string target;
};

/// Central tetrahedron BDEG plus corner tetrahedra cut at A, C, F and H.
/// Tetrahedron order: BDEG, A, C, F, H.
CubeComplex five_tet_cube();

/// Glues a new tetrahedron onto the square's two triangles, flipping its
/// diagonal. Throws std::invalid_argument if the square is not on the boundary.
CubeComplex layer_on_square(const CubeComplex& cube, std::string_view square);

/// Glues the source square onto the target square. Throws
/// std::invalid_argument if either square is missing, the map does not
/// respect the square structure, or the diagonals do not correspond.
CubeComplex identify_squares(const CubeComplex& cube, const SquareMap& map);

/// A built triangulation together with its distinguished degree-four edge.
struct Construction {
  Triangulation tri;
  TetEdge edge_e;
};

/// Five-tetrahedron cube, layered on ABCD, with opposite squares identified
/// by ABCD->GFEH, ABFE->CDHG and ADHE->CGFB.
Construction build_x101();

/// x101 after a 4-4 move about its layered diagonal. `choice` selects the
/// new axis (see move_44).
Triangulation build_x103(int choice = 0);

struct Cover {
  Triangulation tri;
  /// projection[i] is the base tetrahedron under cover tetrahedron i.
  std::vector<std::size_t> projection;
};

/// Orientation double cover: tetrahedron t lifts to t and n+t. Throws
/// std::invalid_argument if the input is already orientable or disconnected.
Cover double_cover_with_projection(const Triangulation& tri);
Triangulation double_cover(const Triangulation& tri);

/// The classical two-tetrahedron gluing of the figure-eight knot complement.
Triangulation figure_eight();

}  // namespace cusp
