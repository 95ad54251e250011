#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CUSP_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

struct Files {
  fs::path dir = fs::temp_directory_path() / "cusp_cli_test";
  Files() {
    fs::create_directories(dir);
    run("build x101 -o " + path("x101.tri"));
    run("build x103 --choice 0 -o " + path("x103.tri"));
    run("build figure8 -o " + path("m004.tri"));
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("build piped into invariants") {
  const auto r = run("build x101 | " + std::string(CUSP_CLI_PATH) + " invariants");
  CHECK(r.code == 0);
  CHECK(has(r.out, "H1: Z + Z_2 + Z_2\n"));
  CHECK(has(r.out, "orientable: no\n"));
  CHECK(has(r.out, "tetrahedra: 6\n"));
}

TEST_CASE("output is stable across runs") {
  CHECK(run("build x101").out == run("build x101").out);
  CHECK(run("build x103 --choice 1").out == run("build x103 --choice 1").out);
}

TEST_CASE("iso, connect and dedupe") {
  Files f;
  CHECK(run("iso " + f.path("x101.tri") + " " + f.path("x103.tri")).code == 1);
  const auto same = run("iso " + f.path("x101.tri") + " " + f.path("x101.tri"));
  CHECK(same.code == 0);
  CHECK(has(same.out, "isomorphic"));

  const auto c = run("connect " + f.path("x101.tri") + " " + f.path("x103.tri") + " --max-extra 1 --max-depth 2");
  CHECK(c.code == 0);
  CHECK(has(c.out, "moves: 2\n"));
  CHECK(has(c.out, "move 1: 2-3"));
  CHECK(has(c.out, "move 2: 3-2"));

  const auto d = run("connect " + f.path("x101.tri") + " " + f.path("m004.tri"));
  CHECK(d.code == 1);
  CHECK(has(d.out, "distinct"));
  const auto u = run("connect " + f.path("x101.tri") + " " + f.path("x103.tri") + " --max-depth 1");
  CHECK(u.code == 1);
  CHECK(has(u.out, "unknown"));

  const auto g = run("dedupe " + f.path("x101.tri") + " " + f.path("x103.tri") + " " + f.path("m004.tri"));
  CHECK(g.code == 0);
  CHECK(has(g.out, "x101.tri " + f.path("x103.tri")));
}

TEST_CASE("isosig accepts sig: tokens") {
  const auto s = run("build x101 | " + std::string(CUSP_CLI_PATH) + " isosig");
  CHECK(s.code == 0);
  const std::string sig = s.out.substr(0, s.out.size() - 1);
  CHECK(run("isosig sig:" + sig).out == s.out);
}

TEST_CASE("move then volume") {
  Files f;
  const auto m = run("move " + f.path("x101.tri") + " --type 23 --loc 0 -o " + f.path("up.tri"));
  CHECK(m.code == 0);
  CHECK(has(run("invariants " + f.path("up.tri")).out, "tetrahedra: 7\n"));
  CHECK(run("move " + f.path("x101.tri") + " --type 55 --loc 0").code == 2);

  const auto v = run("volume " + f.path("x103.tri"));
  CHECK(v.code == 0);
  CHECK(has(v.out, "status: interior-max\n"));
  CHECK(has(v.out, "volume: 5.0747080"));
}

TEST_CASE("validate and usage errors") {
  Files f;
  {
    std::ofstream out(f.path("open.tri"));
    out << "tets 1\n- - - -\n";
  }
  const auto v = run("validate " + f.path("open.tri"));
  CHECK(v.code == 1);
  CHECK(has(v.out, "unglued: tet 0 face 0"));
  CHECK(run("validate " + f.path("x101.tri")).code == 0);
  {
    std::ofstream out(f.path("bad.tri"));
    out << "tets 1\n0:1230 0:3012 3:0120 0:0132\n";
  }
  CHECK(run("validate " + f.path("bad.tri")).code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("build x999").code == 2);
}
