#include <doctest.h>

#include <fstream>
#include <stdexcept>

#include "cusp/builders.hpp"
#include "cusp/gluing_file.hpp"
#include "cusp/isosig.hpp"
#include "cusp/skeleton.hpp"
#include "support.hpp"

using namespace cusp;

namespace {

ParseErrorKind kind_of(const std::string& text) {
  try {
    parse_gluing_table(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ParseErrorKind::BadHeader;
}

}  // namespace

TEST_CASE("round trip on all built triangulations") {
  for (const auto& [name, tri] : testing::built_triangulations()) {
    CAPTURE(name);
    const auto text = serialize_gluing_table(tri);
    const auto back = parse_gluing_table(text);
    CHECK(back == tri);
    CHECK(serialize_gluing_table(back) == text);
  }
}

TEST_CASE("figure-eight text") {
  CHECK(serialize_gluing_table(figure_eight()) ==
        "tets 2\n1:1302 1:2031 1:0321 1:2103\n0:1302 0:2031 0:0321 0:2103\n");
}

TEST_CASE("comments, blank lines and unglued faces") {
  const auto t = parse_gluing_table("# one open tetrahedron\n\ntets 1   # header\n- - - -\n");
  CHECK(t.size() == 1);
  CHECK_FALSE(validate(t).closed);
  CHECK(serialize_gluing_table(t) == "tets 1\n- - - -\n");
}

TEST_CASE("parse errors are distinguished") {
  try {
    parse_gluing_table("tets 1\n0:1230 0:3012 3:0120 0:0132\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK(kind_of("tets 1\n0:1230 0:3012 0:0120 0:0132\n") == ParseErrorKind::NotPermutation);
  CHECK(kind_of("tet 1\n") == ParseErrorKind::BadHeader);
  CHECK(kind_of("tets x\n") == ParseErrorKind::BadHeader);
  CHECK(kind_of("tets 1\n0:12x0 0:3012 0:0132 0:0132\n") == ParseErrorKind::MalformedToken);
  CHECK(kind_of("tets 1\n5:1230 0:3012 0:0132 0:0132\n") == ParseErrorKind::TetOutOfRange);
  CHECK(kind_of("tets 1\n0:1230 0:3012 0:0132\n") == ParseErrorKind::WrongFaceCount);
  CHECK(kind_of("tets 2\n- - - -\n") == ParseErrorKind::WrongTetCount);
}

TEST_CASE("non-involutive table parses, then fails validation") {
  const auto t = parse_gluing_table("tets 2\n1:0132 - - -\n1:1023 - - -\n");
  const auto r = validate(t);
  CHECK_FALSE(r.involutive);
  CHECK_FALSE(r.census_valid());
}

TEST_CASE("load_triangulation accepts signatures and files") {
  const auto x101 = build_x101().tri;
  const auto sig = canonical_signature(x101);
  CHECK(canonical_signature(load_triangulation("sig:" + sig.text)) == sig);
  const std::string path = "gluing_file_test.tri";
  {
    std::ofstream out(path);
    out << serialize_gluing_table(x101);
  }
  CHECK(load_triangulation(path) == x101);
  CHECK_THROWS(load_triangulation("no/such/file.tri"));
}
