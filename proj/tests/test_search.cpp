#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "cusp/builders.hpp"
#include "cusp/isosig.hpp"
#include "cusp/search.hpp"

using namespace cusp;

namespace {

void check_replays(const Triangulation& a, const Triangulation& b, const PachnerPath& p) {
  CHECK(p.start == canonical_signature(a));
  CHECK(p.end == canonical_signature(b));
  CHECK(canonical_signature(replay(a, p.moves)) == p.end);
}

}  // namespace

TEST_CASE("x101 and x103 are two Pachner moves apart") {
  const auto x101 = build_x101().tri;
  for (int c : {0, 1}) {
    CAPTURE(c);
    const auto x103 = build_x103(c);
    const auto r = bfs_connect(x101, x103, {1, 2, 200000});
    REQUIRE(r.status == ConnectStatus::Connected);
    REQUIRE(r.path);
    REQUIRE(r.path->moves.size() == 2);
    CHECK(r.path->moves[0].kind == MoveKind::Pachner23);
    CHECK(r.path->moves[1].kind == MoveKind::Pachner32);
    check_replays(x101, x103, *r.path);
    // nothing shorter: a depth-1 search fails
    const auto shorter = bfs_connect(x101, x103, {1, 1, 200000});
    CHECK(shorter.status == ConnectStatus::NotFound);
    CHECK_FALSE(shorter.path);
    // no extra tetrahedron, no path
    CHECK(bfs_connect(x101, x103, {0, 2, 200000}).status == ConnectStatus::NotFound);
  }
}

TEST_CASE("meet-in-the-middle search finds the same length") {
  const auto x101 = build_x101().tri;
  const auto x103 = build_x103(0);
  const auto r = bfs_connect(x101, x103, {1, 4, 200000});
  REQUIRE(r.path);
  CHECK(r.path->moves.size() == 2);
  check_replays(x101, x103, *r.path);
  const auto back = bfs_connect(x103, x101, {1, 4, 200000});
  REQUIRE(back.path);
  CHECK(back.path->moves.size() == 2);
  check_replays(x103, x101, *back.path);
}

TEST_CASE("isomorphic inputs need no moves") {
  const auto x101 = build_x101().tri;
  const auto r = bfs_connect(x101, relabel(x101, 3), {1, 2, 200000});
  REQUIRE(r.path);
  CHECK(r.status == ConnectStatus::Connected);
  CHECK(r.path->moves.empty());
}

TEST_CASE("different invariants short-circuit") {
  const auto r = bfs_connect(build_x101().tri, figure_eight(), {1, 2, 200000});
  CHECK(r.status == ConnectStatus::Distinct);
  CHECK_FALSE(r.path);
  CHECK(r.visited == 0);
  CHECK(r.reason.find("Z + Z_2 + Z_2") != std::string::npos);
  CHECK_THROWS_AS(bfs_connect(Triangulation(1), figure_eight(), {}), std::invalid_argument);
}

TEST_CASE("node cap is honoured") {
  const auto x101 = build_x101().tri;
  const auto r = bfs_connect(x101, build_x103(0), {1, 2, 3});
  CHECK(r.status == ConnectStatus::NotFound);
  CHECK(r.visited <= 3);
}

TEST_CASE("dedupe") {
  const auto x101 = build_x101().tri;
  std::vector<CensusEntry> entries{{"x101", x101}, {"x103", build_x103(0)}, {"m004", figure_eight()}};
  const auto groups = dedupe_census(entries, {1, 2, 200000});
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].members == std::vector<std::string>{"m004"});
  CHECK(groups[1].members == std::vector<std::string>{"x101", "x103"});
  REQUIRE(groups[1].witnesses.size() == 1);
  CHECK(groups[1].witnesses[0].path.moves.size() == 2);

  auto reversed = entries;
  std::reverse(reversed.begin(), reversed.end());
  reversed[0].tri = relabel(reversed[0].tri, 8);
  const auto again = dedupe_census(reversed, {1, 2, 200000});
  REQUIRE(again.size() == groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) CHECK(again[i].members == groups[i].members);

  const auto dup = dedupe_census({{"a", x101}, {"b", relabel(x101, 1)}}, {1, 2, 200000});
  REQUIRE(dup.size() == 1);
  REQUIRE(dup[0].witnesses.size() == 1);
  CHECK(dup[0].witnesses[0].path.moves.empty());

  CHECK(dedupe_census({}, {}).empty());
}
