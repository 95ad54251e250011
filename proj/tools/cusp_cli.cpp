// Command-line front end for building, checking and comparing ideal
// triangulations. Exit codes: 0 success or affirmative answer, 1 negative
// answer or nothing found, 2 invalid input or usage.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cusp/builders.hpp"
#include "cusp/geom.hpp"
#include "cusp/gluing_file.hpp"
#include "cusp/homology.hpp"
#include "cusp/isosig.hpp"
#include "cusp/moves.hpp"
#include "cusp/search.hpp"
#include "cusp/skeleton.hpp"

namespace {

using namespace cusp;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInvalid = 2;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_build(const std::string& which, int choice, const std::string& out) {
  Triangulation tri;
  if (which == "x101") tri = build_x101().tri;
  else if (which == "x103") tri = build_x103(choice);
  else if (which == "figure8") tri = figure_eight();
  else throw UsageError("unknown triangulation '" + which + "' (expected x101, x103 or figure8)");
  write_output(out, serialize_gluing_table(tri));
  return kOk;
}

int cmd_validate(const std::string& file) {
  const Triangulation tri = load_triangulation(file);
  const ValidationReport r = validate(tri);
  std::cout << "tetrahedra: " << tri.size() << "\n";
  std::cout << "involution: " << (r.involutive ? "ok" : "violated") << "\n";
  for (const auto& f : r.involution_violations)
    std::cout << "  non-involutive: tet " << f.tet << " face " << f.face << "\n";
  std::cout << "closed: " << yes_no(r.closed) << "\n";
  for (const auto& f : r.unglued_faces) std::cout << "  unglued: tet " << f.tet << " face " << f.face << "\n";
  std::cout << "connected: " << yes_no(r.connected) << "\n";
  if (r.involutive) {
    std::cout << "edges-valid: " << yes_no(r.edges_valid) << "\n";
    for (auto e : r.invalid_edges) std::cout << "  invalid edge: " << e << "\n";
    for (const auto& l : r.links) {
      std::string kind = "other";
      if (l.link.is_torus()) kind = "torus";
      else if (l.link.is_klein_bottle()) kind = "klein-bottle";
      std::cout << "vertex " << l.vertex_class << ": " << kind << " (chi " << l.link.euler_characteristic
                << ", " << (l.link.orientable ? "orientable" : "non-orientable")
                << (l.link.closed ? "" : ", bounded") << ")\n";
    }
  }
  std::cout << "census-valid: " << yes_no(r.census_valid()) << "\n";
  return r.census_valid() ? kOk : kNegative;
}

int cmd_invariants(const std::string& file) {
  const Triangulation tri = load_triangulation(file);
  require_census_valid(tri);
  const SkeletonReport sk = skeleton(tri);
  std::cout << "tetrahedra: " << tri.size() << "\n";
  std::cout << "edges: " << sk.edges.size() << "\n";
  std::cout << "edge-degrees:";
  for (const auto& e : sk.edges) std::cout << ' ' << e.degree();
  std::cout << "\n";
  std::cout << "cusps: " << sk.vertices.size() << "\n";
  std::cout << "orientable: " << yes_no(is_orientable(tri)) << "\n";
  std::cout << "H1: " << first_homology(tri).str() << "\n";
  std::cout << "isosig: " << canonical_signature(tri).text << "\n";
  return kOk;
}

int cmd_isosig(const std::string& file) {
  std::cout << canonical_signature(load_triangulation(file)).text << "\n";
  return kOk;
}

int cmd_iso(const std::string& a, const std::string& b) {
  const auto witness = are_isomorphic(load_triangulation(a), load_triangulation(b));
  if (!witness) {
    std::cout << "not isomorphic\n";
    return kNegative;
  }
  std::cout << "isomorphic\n";
  for (std::size_t t = 0; t < witness->tet_map.size(); ++t)
    std::cout << "tet " << t << " -> " << witness->tet_map[t] << " (" << witness->vertex_maps[t].str() << ")\n";
  return kOk;
}

int cmd_move(const std::string& file, const std::string& type, std::size_t loc, int choice,
             const std::string& out) {
  const Triangulation tri = load_triangulation(file);
  MoveDescriptor m;
  if (type == "23") m.kind = MoveKind::Pachner23;
  else if (type == "32") m.kind = MoveKind::Pachner32;
  else if (type == "44") m.kind = MoveKind::Move44;
  else throw UsageError("--type must be 23, 32 or 44");
  m.location = loc;
  m.choice = choice;
  write_output(out, serialize_gluing_table(apply_move(tri, m)));
  return kOk;
}

int cmd_volume(const std::string& file, double tol, std::size_t max_iter) {
  const Triangulation tri = load_triangulation(file);
  VolumeOptions opts;
  opts.gradient_tol = tol;
  opts.max_iterations = max_iter;
  const VolumeResult r = max_volume(tri, opts);
  std::cout << "status: " << to_string(r.status) << "\n";
  if (r.status == VolumeStatus::Infeasible) return kNegative;
  std::cout << "volume: " << fixed(r.volume, 10) << "\n";
  if (r.direct_volume) std::cout << "direct-volume: " << fixed(*r.direct_volume, 10) << "\n";
  std::cout << "iterations: " << r.iterations << "\n";
  std::cout << "gradient-norm: " << sci(r.gradient_norm) << "\n";
  std::cout << "tet-residual: " << sci(r.tet_residual) << "\n";
  std::cout << "edge-residual: " << sci(r.edge_residual) << "\n";
  std::cout << "min-angle: " << fixed(r.min_angle, 10) << "\n";
  for (const auto& z : r.near_zero) std::cout << "flat: tet " << z.tet << " angle " << z.angle << "\n";
  return r.status == VolumeStatus::NotConverged ? kNegative : kOk;
}

void print_path(const PachnerPath& path) {
  std::cout << "moves: " << path.moves.size() << "\n";
  for (std::size_t i = 0; i < path.moves.size(); ++i)
    std::cout << "move " << i + 1 << ": " << path.moves[i].str() << "\n";
}

int cmd_connect(const std::string& a, const std::string& b, const SearchBudget& budget) {
  const ConnectResult r = bfs_connect(load_triangulation(a), load_triangulation(b), budget);
  switch (r.status) {
    case ConnectStatus::Connected:
      std::cout << "connected\n";
      print_path(*r.path);
      std::cout << "start: " << r.path->start.text << "\n";
      std::cout << "end: " << r.path->end.text << "\n";
      return kOk;
    case ConnectStatus::Distinct:
      std::cout << "distinct: " << r.reason << " (the manifolds are not homeomorphic)\n";
      return kNegative;
    case ConnectStatus::NotFound:
      std::cout << "unknown: " << r.reason << " (visited " << r.visited
                << " triangulations; the manifolds may still be homeomorphic)\n";
      return kNegative;
  }
  return kNegative;
}

int cmd_dedupe(const std::vector<std::string>& files, const SearchBudget& budget) {
  std::vector<CensusEntry> entries;
  for (const auto& f : files) entries.push_back({f, load_triangulation(f)});
  const auto groups = dedupe_census(entries, budget);
  bool duplicates = false;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::cout << "group " << g + 1 << ":";
    for (const auto& m : groups[g].members) std::cout << ' ' << m;
    std::cout << "\n";
    if (groups[g].members.size() > 1) duplicates = true;
    for (const auto& w : groups[g].witnesses) {
      std::cout << "  " << w.from << " -> " << w.to << ":";
      if (w.path.moves.empty()) std::cout << " isomorphic";
      for (const auto& m : w.path.moves) std::cout << " [" << m.str() << "]";
      std::cout << "\n";
    }
  }
  if (!duplicates) std::cout << "no duplicates found within budget\n";
  return duplicates ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideal triangulations: construction, invariants, moves and census comparison"};
  app.require_subcommand(1);

  std::string which, out, file, file_b, type;
  std::vector<std::string> files;
  int choice = 0;
  std::size_t loc = 0;
  double tol = 1e-9;
  std::size_t max_iter = 100000;
  SearchBudget budget;

  auto* build = app.add_subcommand("build", "Write a built triangulation as a gluing table");
  build->add_option("name", which, "x101, x103 or figure8")->required();
  build->add_option("--choice", choice, "4-4 axis choice for x103")->check(CLI::Range(0, 1));
  build->add_option("-o,--output", out, "Output file (default: standard output)");

  auto* val = app.add_subcommand("validate", "Check that a table is a valid ideal triangulation");
  val->add_option("file", file, "Gluing table, sig:<signature>, or - for stdin")->default_val("-");

  auto* inv = app.add_subcommand("invariants", "Edges, cusps, orientability, H1 and signature");
  inv->add_option("file", file)->default_val("-");

  auto* sig = app.add_subcommand("isosig", "Print the canonical isomorphism signature");
  sig->add_option("file", file)->default_val("-");

  auto* iso = app.add_subcommand("iso", "Test two triangulations for combinatorial isomorphism");
  iso->add_option("a", file)->required();
  iso->add_option("b", file_b)->required();

  auto* move = app.add_subcommand("move", "Apply a 2-3, 3-2 or 4-4 move");
  move->add_option("file", file)->default_val("-");
  move->add_option("--type", type, "23, 32 or 44")->required();
  move->add_option("--loc", loc, "Face index (23) or edge index (32, 44)")->required();
  move->add_option("--choice", choice, "4-4 axis choice")->check(CLI::Range(0, 1));
  move->add_option("-o,--output", out);

  auto* vol = app.add_subcommand("volume", "Maximize volume over angle structures");
  vol->add_option("file", file)->default_val("-");
  vol->add_option("--tol", tol, "Projected gradient tolerance")->check(CLI::PositiveNumber);
  vol->add_option("--max-iter", max_iter, "Iteration cap");

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-extra", budget.max_extra_tets, "Extra tetrahedra allowed")->default_val(1);
    sub->add_option("--max-depth", budget.max_depth, "Maximum number of moves")->default_val(2);
    sub->add_option("--max-nodes", budget.max_nodes, "Cap on visited triangulations")->default_val(200000);
  };
  auto* con = app.add_subcommand("connect", "Search for a 2-3/3-2 move path between two triangulations");
  con->add_option("a", file)->required();
  con->add_option("b", file_b)->required();
  add_budget(con);

  auto* ded = app.add_subcommand("dedupe", "Group triangulations joined by move paths");
  ded->add_option("files", files)->required();
  add_budget(ded);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*build) return cmd_build(which, choice, out);
    if (*val) return cmd_validate(file);
    if (*inv) return cmd_invariants(file);
    if (*sig) return cmd_isosig(file);
    if (*iso) return cmd_iso(file, file_b);
    if (*move) return cmd_move(file, type, loc, choice, out);
    if (*vol) return cmd_volume(file, tol, max_iter);
    if (*con) return cmd_connect(file, file_b, budget);
    if (*ded) return cmd_dedupe(files, budget);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
