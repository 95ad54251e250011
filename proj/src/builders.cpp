#include "cusp/builders.hpp"

#include <algorithm>
#include <stdexcept>

#include "cusp/moves.hpp"
#include "cusp/skeleton.hpp"

namespace cusp {

namespace {

std::string sorted(std::string_view s) {
  std::string out(s);
  std::sort(out.begin(), out.end());
  return out;
}

int label_of(const std::array<char, 4>& names, char name) {
  for (int i = 0; i < 4; ++i)
    if (names[i] == name) return i;
  return -1;
}

std::string triangle_names(const CubeComplex& c, FaceRef f) {
  std::string s;
  for (int i = 0; i < 4; ++i)
    if (i != f.face) s += c.names[f.tet][i];
  return sorted(s);
}

// Glue face `a` onto face `b`, matching vertices through `rename` applied to
// the names on side a.
template <typename Rename>
void glue_by_names(CubeComplex& c, FaceRef a, FaceRef b, Rename rename) {
  std::array<int, 4> img{};
  for (int x = 0; x < 4; ++x) {
    if (x == a.face) {
      img[x] = b.face;
      continue;
    }
    img[x] = label_of(c.names[b.tet], rename(c.names[a.tet][x]));
    if (img[x] < 0 || img[x] == b.face) throw std::logic_error("faces do not match by name");
  }
  c.tri.join(a.tet, a.face, b.tet, Perm4(img[0], img[1], img[2], img[3]));
}

std::size_t add_named(CubeComplex& c, std::array<char, 4> names) {
  c.names.push_back(names);
  return c.tri.add_tetrahedron();
}

// Square with diagonal s[i]s[i+2]; triangles are located among boundary faces.
Square make_square(const CubeComplex& c, std::string_view corners, std::string_view diagonal) {
  Square sq;
  std::copy(corners.begin(), corners.end(), sq.corners.begin());
  sq.diagonal = {diagonal[0], diagonal[1]};
  std::string others;
  for (char x : corners)
    if (x != diagonal[0] && x != diagonal[1]) others += x;
  int k = 0;
  for (std::size_t t = 0; t < c.tri.size(); ++t)
    for (int f = 0; f < 4; ++f) {
      if (c.tri.gluing(t, f)) continue;
      const std::string tn = triangle_names(c, {t, f});
      for (char o : others)
        if (tn == sorted(std::string{diagonal[0], diagonal[1], o})) sq.triangles[k++] = {t, f};
    }
  if (k != 2) throw std::logic_error("square triangles not found");
  return sq;
}

}  // namespace

const Square* CubeComplex::find_square(std::string_view corners) const {
  const std::string key = sorted(corners);
  for (const auto& sq : squares)
    if (sorted(sq.name()) == key) return &sq;
  return nullptr;
}

CubeComplex five_tet_cube() {
  CubeComplex c;
  add_named(c, {'B', 'D', 'E', 'G'});
  const std::size_t a = add_named(c, {'A', 'B', 'D', 'E'});
  const std::size_t cc = add_named(c, {'C', 'B', 'D', 'G'});
  const std::size_t f = add_named(c, {'F', 'B', 'E', 'G'});
  const std::size_t h = add_named(c, {'H', 'D', 'E', 'G'});
  auto same = [](char x) { return x; };
  // Each corner tetrahedron meets the central one along the face opposite
  // its cut corner; the central face is the one missing the other vertex.
  glue_by_names(c, {a, 0}, {0, 3}, same);   // BDE
  glue_by_names(c, {cc, 0}, {0, 2}, same);  // BDG
  glue_by_names(c, {f, 0}, {0, 1}, same);   // BEG
  glue_by_names(c, {h, 0}, {0, 0}, same);   // DEG
  c.squares = {make_square(c, "ABCD", "BD"), make_square(c, "EFGH", "EG"),
               make_square(c, "ABFE", "BE"), make_square(c, "CDHG", "DG"),
               make_square(c, "ADHE", "DE"), make_square(c, "BCGF", "BG")};
  return c;
}

CubeComplex layer_on_square(const CubeComplex& cube, std::string_view square) {
  const Square* found = cube.find_square(square);
  if (!found) throw std::invalid_argument("square " + std::string(square) + " is not on the boundary");
  CubeComplex c = cube;
  Square sq = *found;
  const auto& s = sq.corners;
  const std::size_t t = add_named(c, s);
  // Labels of the new tetrahedron are the square's corner positions.
  const bool diag02 = (label_of(s, sq.diagonal[0]) % 2 == 0);
  const int on_a = diag02 ? 1 : 0;  // faces of the new tetrahedron glued down
  const int on_b = diag02 ? 3 : 2;
  auto same = [](char x) { return x; };
  for (int f : {on_a, on_b}) {
    std::string tn;
    for (int i = 0; i < 4; ++i)
      if (i != f) tn += s[i];
    tn = sorted(tn);
    const FaceRef target = (triangle_names(c, sq.triangles[0]) == tn) ? sq.triangles[0] : sq.triangles[1];
    glue_by_names(c, {t, f}, target, same);
  }
  const int old0 = label_of(s, sq.diagonal[0]);
  const int old1 = label_of(s, sq.diagonal[1]);
  c.layered_diagonal = TetEdge{t, edge_number(old0, old1)};
  // The new diagonal joins the other two corners.
  const int new0 = diag02 ? 1 : 0;
  sq.diagonal = {s[new0], s[new0 + 2]};
  sq.triangles = {FaceRef{t, 1 - on_a}, FaceRef{t, 5 - on_b}};
  for (auto& existing : c.squares)
    if (existing.name() == sq.name()) existing = sq;
  return c;
}

CubeComplex identify_squares(const CubeComplex& cube, const SquareMap& map) {
  if (map.source.size() != 4 || map.target.size() != 4)
    throw std::invalid_argument("square maps need four corners on each side");
  const Square* src = cube.find_square(map.source);
  const Square* dst = cube.find_square(map.target);
  if (!src) throw std::invalid_argument("square " + map.source + " is not on the boundary");
  if (!dst) throw std::invalid_argument("square " + map.target + " is not on the boundary");
  if (src == dst) throw std::invalid_argument("cannot identify a square with itself");

  auto image = [&](char x) {
    const auto i = map.source.find(x);
    return map.target[i];
  };
  // Adjacent corners must go to adjacent corners.
  auto adjacent = [](const Square& sq, char x, char y) {
    const int i = label_of(sq.corners, x);
    const int j = label_of(sq.corners, y);
    return (i - j + 4) % 4 == 1 || (j - i + 4) % 4 == 1;
  };
  for (int i = 0; i < 4; ++i) {
    const char x = src->corners[i];
    const char y = src->corners[(i + 1) % 4];
    if (map.source.find(x) == std::string::npos || !adjacent(*dst, image(x), image(y)))
      throw std::invalid_argument("map " + map.source + "->" + map.target +
                                  " does not respect the square structure");
  }
  const std::string sent = sorted(std::string{image(src->diagonal[0]), image(src->diagonal[1])});
  const std::string want = sorted(std::string{dst->diagonal[0], dst->diagonal[1]});
  if (sent != want)
    throw std::invalid_argument("diagonal mismatch: " + map.source + "->" + map.target + " sends " +
                                std::string{src->diagonal[0], src->diagonal[1]} + " to " + sent +
                                ", but the diagonal of " + dst->name() + " is " + want);

  CubeComplex c = cube;
  for (const FaceRef& from : src->triangles) {
    std::string tn;
    for (char x : triangle_names(c, from)) tn += image(x);
    tn = sorted(tn);
    const FaceRef to = (triangle_names(c, dst->triangles[0]) == tn) ? dst->triangles[0] : dst->triangles[1];
    glue_by_names(c, from, to, image);
  }
  const std::string sname = src->name();
  const std::string dname = dst->name();
  std::erase_if(c.squares, [&](const Square& sq) { return sq.name() == sname || sq.name() == dname; });
  return c;
}

Construction build_x101() {
  CubeComplex c = layer_on_square(five_tet_cube(), "ABCD");
  c = identify_squares(c, {"ABCD", "GFEH"});
  c = identify_squares(c, {"ABFE", "CDHG"});
  c = identify_squares(c, {"ADHE", "CGFB"});
  return {c.tri, *c.layered_diagonal};
}

Triangulation build_x103(int choice) {
  const Construction x101 = build_x101();
  const SkeletonReport sk = skeleton(x101.tri);
  return move_44(x101.tri, sk.edge_index[x101.edge_e.tet][x101.edge_e.edge], choice);
}

Cover double_cover_with_projection(const Triangulation& tri) {
  if (!tri.is_connected()) throw std::invalid_argument("double cover needs a connected triangulation");
  if (!tri.is_involutive()) throw std::invalid_argument("gluing table is not involutive");
  if (is_orientable(tri)) throw std::invalid_argument("already orientable");
  const std::size_t n = tri.size();
  Cover cover;
  cover.tri = Triangulation(2 * n);
  cover.projection.resize(2 * n);
  for (std::size_t t = 0; t < n; ++t) {
    cover.projection[t] = t;
    cover.projection[n + t] = t;
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (!g) continue;
      // Odd gluings keep the sheet, even gluings swap it.
      const bool swap_sheet = g->perm.sign() > 0;
      for (std::size_t sheet = 0; sheet < 2; ++sheet) {
        const std::size_t other = swap_sheet ? 1 - sheet : sheet;
        cover.tri.set_gluing(sheet * n + t, f, Gluing{other * n + g->tet, g->perm});
      }
    }
  }
  return cover;
}

Triangulation double_cover(const Triangulation& tri) { return double_cover_with_projection(tri).tri; }

Triangulation figure_eight() {
  Triangulation tri(2);
  tri.join(0, 0, 1, Perm4(1, 3, 0, 2));
  tri.join(0, 1, 1, Perm4(2, 0, 3, 1));
  tri.join(0, 2, 1, Perm4(0, 3, 2, 1));
  tri.join(0, 3, 1, Perm4(2, 1, 0, 3));
  return tri;
}

}  // namespace cusp
