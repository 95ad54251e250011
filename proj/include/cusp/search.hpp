#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cusp/homology.hpp"
#include "cusp/isosig.hpp"
#include "cusp/moves.hpp"

namespace cusp {

struct SearchBudget {
  /// Never visit a triangulation with more than max(n_a, n_b) + this many tetrahedra.
  std::size_t max_extra_tets = 1;
  std::size_t max_depth = 2;
  std::size_t max_nodes = 200000;
};

struct PachnerPath {
  std::vector<MoveDescriptor> moves;
  IsoSig start;
  IsoSig end;
};

/// Applies the moves in order.
Triangulation replay(const Triangulation& start, const std::vector<MoveDescriptor>& moves);

/// Cheap topological invariants used to rule out a connection up front.
struct ManifoldInvariants {
  std::size_t cusps = 0;
  bool orientable = false;
  AbelianGroup homology;

  friend bool operator==(const ManifoldInvariants&, const ManifoldInvariants&) = default;
};
ManifoldInvariants manifold_invariants(const Triangulation& tri);

enum class ConnectStatus {
  Connected,
  /// Invariants differ: the manifolds are certainly distinct.
  Distinct,
  /// Nothing found within the budget; says nothing about the manifolds.
  NotFound,
};
std::string to_string(ConnectStatus s);

struct ConnectResult {
  ConnectStatus status = ConnectStatus::NotFound;
  std::optional<PachnerPath> path;
  std::string reason;
  std::size_t visited = 0;
};

/// Shortest sequence of 2-3/3-2 moves turning `a` into a triangulation
/// isomorphic to `b`, within the budget. States are keyed by canonical
/// signature. Depth budgets up to 2 search forward from `a` and return the
/// lexicographically least shortest path; deeper budgets meet in the middle.
/// Throws std::invalid_argument unless both inputs are census-valid.
ConnectResult bfs_connect(const Triangulation& a, const Triangulation& b, const SearchBudget& budget);

struct CensusEntry {
  std::string name;
  Triangulation tri;
};

struct DedupeWitness {
  std::string from;
  std::string to;
  PachnerPath path;
};

struct DedupeGroup {
  std::vector<std::string> members;
  std::vector<DedupeWitness> witnesses;
};

/// Groups entries joined by move paths within the budget. Entries are
/// compared only when their invariants agree; output is sorted by name and
/// does not depend on input order.
std::vector<DedupeGroup> dedupe_census(const std::vector<CensusEntry>& entries, const SearchBudget& budget);

}  // namespace cusp
