#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "cusp/builders.hpp"
#include "cusp/gluing_file.hpp"
#include "cusp/homology.hpp"
#include "cusp/isosig.hpp"
#include "cusp/skeleton.hpp"

using namespace cusp;

namespace {

std::string diag(const Square& s) {
  std::string d{s.diagonal[0], s.diagonal[1]};
  std::sort(d.begin(), d.end());
  return d;
}

std::size_t unglued(const Triangulation& t) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (int f = 0; f < 4; ++f) k += !t.gluing(i, f);
  return k;
}

// Unit-cube coordinates: ABCD bottom, EFGH top, A-E etc vertical.
const std::map<char, std::array<int, 3>> kCoords{
    {'A', {0, 0, 0}}, {'B', {1, 0, 0}}, {'C', {1, 1, 0}}, {'D', {0, 1, 0}},
    {'E', {0, 0, 1}}, {'F', {1, 0, 1}}, {'G', {1, 1, 1}}, {'H', {0, 1, 1}}};

int dist2(char x, char y) {
  int d = 0;
  for (int i = 0; i < 3; ++i) d += (kCoords.at(x)[i] - kCoords.at(y)[i]) * (kCoords.at(x)[i] - kCoords.at(y)[i]);
  return d;
}

}  // namespace

TEST_CASE("five-tetrahedron cube") {
  const auto c = five_tet_cube();
  CHECK(c.tri.size() == 5);
  CHECK(unglued(c.tri) == 12);
  for (int f = 0; f < 4; ++f) CHECK(c.tri.gluing(0, f).has_value());
  CHECK(c.squares.size() == 6);
  const std::map<std::string, std::string> want{{"ABCD", "BD"}, {"EFGH", "EG"}, {"ABFE", "BE"},
                                                {"CDHG", "DG"}, {"ADHE", "DE"}, {"BCGF", "BG"}};
  for (const auto& [sq, d] : want) {
    const Square* s = c.find_square(sq);
    REQUIRE(s);
    CHECK(diag(*s) == d);
    // both triangles contain the diagonal, and together cover the square
    std::string all;
    for (const auto& tr : s->triangles) {
      std::string names;
      for (int i = 0; i < 4; ++i)
        if (i != tr.face) names += c.names[tr.tet][i];
      CHECK(names.find(d[0]) != std::string::npos);
      CHECK(names.find(d[1]) != std::string::npos);
      all += names;
    }
    for (char x : sq) CHECK(all.find(x) != std::string::npos);
  }
  // every tetrahedron spans a real cube simplex: corner tets have three unit edges
  for (std::size_t t = 1; t < 5; ++t) {
    int unit = 0;
    for (int i = 1; i < 4; ++i) unit += dist2(c.names[t][0], c.names[t][i]) == 1;
    CHECK(unit == 3);
  }
}

TEST_CASE("layering flips the diagonal") {
  const auto c = layer_on_square(five_tet_cube(), "ABCD");
  CHECK(c.tri.size() == 6);
  CHECK(diag(*c.find_square("ABCD")) == "AC");
  CHECK(unglued(c.tri) == 12);
  REQUIRE(c.layered_diagonal.has_value());
  const auto& e = *c.layered_diagonal;
  std::string ends{c.names[e.tet][kEdgeVertices[e.edge][0]], c.names[e.tet][kEdgeVertices[e.edge][1]]};
  std::sort(ends.begin(), ends.end());
  CHECK(ends == "BD");
  const auto twice = layer_on_square(c, "ABCD");
  CHECK(diag(*twice.find_square("ABCD")) == "BD");
  CHECK_THROWS_AS(layer_on_square(identify_squares(c, {"ABCD", "GFEH"}), "ABCD"), std::invalid_argument);
}

TEST_CASE("x101 maps send diagonals to diagonals only after layering") {
  const auto cube = five_tet_cube();
  try {
    identify_squares(cube, {"ABCD", "GFEH"});
    FAIL("expected a diagonal mismatch");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("diagonal mismatch") != std::string::npos);
    CHECK(msg.find("FH") != std::string::npos);
    CHECK(msg.find("EG") != std::string::npos);
  }
  auto c = layer_on_square(cube, "ABCD");
  c = identify_squares(c, {"ABCD", "GFEH"});
  CHECK(unglued(c.tri) == 8);
  c = identify_squares(c, {"ABFE", "CDHG"});
  c = identify_squares(c, {"ADHE", "CGFB"});
  CHECK(unglued(c.tri) == 0);
  CHECK(c.squares.empty());
}

TEST_CASE("identify_squares accepts exactly the diagonal-preserving square maps") {
  const auto c = layer_on_square(five_tet_cube(), "ABCD");
  int accepted = 0;
  for (const auto& s : c.squares)
    for (const auto& t : c.squares) {
      if (&s == &t) continue;
      std::string target = t.name();
      std::sort(target.begin(), target.end());
      do {
        const std::string source = s.name();
        auto image = [&](char x) { return target[source.find(x)]; };
        // oracle: cube geometry. Sides of a square have length 1, diagonals length 2.
        bool expect = true;
        for (int i = 0; i < 4; ++i)
          for (int j = i + 1; j < 4; ++j)
            if (dist2(source[i], source[j]) != dist2(image(source[i]), image(source[j]))) expect = false;
        std::string sent{image(s.diagonal[0]), image(s.diagonal[1])};
        std::sort(sent.begin(), sent.end());
        if (sent != diag(t)) expect = false;
        bool ok = true;
        try {
          const auto r = identify_squares(c, {source, target});
          CHECK(unglued(r.tri) == unglued(c.tri) - 4);
          CHECK(r.tri.is_involutive());
        } catch (const std::invalid_argument&) {
          ok = false;
        }
        CHECK(ok == expect);
        accepted += ok;
      } while (std::next_permutation(target.begin(), target.end()));
    }
  // 8 corner bijections per ordered pair respect the square, 4 of them the diagonal
  CHECK(accepted == 30 * 4);
}

TEST_CASE("x101") {
  const auto x = build_x101();
  const auto& t = x.tri;
  const auto r = validate(t);
  CHECK(r.census_valid());
  CHECK(t.size() == 6);
  CHECK_FALSE(is_orientable(t));
  const auto sk = skeleton(t);
  CHECK(sk.edges[sk.edge_index[x.edge_e.tet][x.edge_e.edge]].degree() == 4);
  CHECK(first_homology(t).str() == "Z + Z_2 + Z_2");
  // deterministic
  CHECK(serialize_gluing_table(build_x101().tri) == serialize_gluing_table(t));
}

TEST_CASE("x103 candidates") {
  const auto x101 = build_x101().tri;
  const auto h = first_homology(x101);
  for (int c : {0, 1}) {
    CAPTURE(c);
    const auto t = build_x103(c);
    CHECK(t.size() == 6);
    CHECK(validate(t).census_valid());
    CHECK(first_homology(t) == h);
    CHECK(skeleton(t).vertices.size() == skeleton(x101).vertices.size());
    CHECK(canonical_signature(t) != canonical_signature(x101));
  }
}

TEST_CASE("double cover") {
  const auto x101 = build_x101().tri;
  const auto cover = double_cover_with_projection(x101);
  CHECK(cover.tri.size() == 12);
  CHECK(validate(cover.tri).census_valid());
  CHECK(is_orientable(cover.tri));
  // projection is a covering map on gluings
  for (std::size_t t = 0; t < 12; ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& up = cover.tri.gluing(t, f);
      const auto& down = x101.gluing(cover.projection[t], f);
      CHECK(cover.projection[up->tet] == down->tet);
      CHECK(up->perm == down->perm);
    }
  CHECK_THROWS_AS(double_cover(cover.tri), std::invalid_argument);
  CHECK_THROWS_AS(double_cover(figure_eight()), std::invalid_argument);
}
