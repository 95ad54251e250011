#include "cusp/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "cusp/skeleton.hpp"
#include "cusp/union_find.hpp"

namespace cusp {

std::string to_string(ConnectStatus s) {
  switch (s) {
    case ConnectStatus::Connected: return "connected";
    case ConnectStatus::Distinct: return "distinct";
    case ConnectStatus::NotFound: return "not-found";
  }
  return "?";
}

Triangulation replay(const Triangulation& start, const std::vector<MoveDescriptor>& moves) {
  Triangulation t = start;
  for (const auto& m : moves) t = apply_move(t, m);
  return t;
}

ManifoldInvariants manifold_invariants(const Triangulation& tri) {
  ManifoldInvariants inv;
  inv.cusps = skeleton(tri).vertices.size();
  inv.orientable = is_orientable(tri);
  inv.homology = first_homology(tri);
  return inv;
}

namespace {

struct Node {
  std::string sig;
  std::size_t parent = 0;
  MoveDescriptor move;
  std::size_t depth = 0;
};

// One breadth-first tree of signatures.
struct Side {
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::pair<std::size_t, Triangulation>> frontier;
  std::size_t depth = 0;

  Side(const Triangulation& root, const std::string& sig) {
    nodes.push_back({sig, 0, {}, 0});
    index.emplace(sig, 0);
    frontier.emplace_back(0, root);
  }

  std::vector<MoveDescriptor> moves_to(std::size_t node) const {
    std::vector<MoveDescriptor> out;
    while (node != 0) {
      out.push_back(nodes[node].move);
      node = nodes[node].parent;
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::vector<std::string> signatures_to_root(std::size_t node) const {
    std::vector<std::string> out;
    while (node != 0) {
      node = nodes[node].parent;
      out.push_back(nodes[node].sig);
    }
    return out;
  }
};

struct Meeting {
  std::size_t a_node = 0;  // node on side a (may be freshly added)
  std::size_t b_node = 0;
  std::size_t length = 0;
};

// Expands one full level of `side`, recording the best meeting with `other`.
// Returns false if the node cap was hit.
bool expand_level(Side& side, const Side* other, bool side_is_a, std::size_t max_tets,
                  std::size_t& total_nodes, std::size_t max_nodes, std::optional<Meeting>& best) {
  std::vector<std::pair<std::size_t, Triangulation>> next;
  bool capped = false;
  for (const auto& [node, tri] : side.frontier) {
    for (const MoveDescriptor& m : pachner_moves(tri, max_tets)) {
      Triangulation child = apply_move(tri, m);
      std::string sig = canonical_signature(child).text;
      auto found = side.index.find(sig);
      std::size_t idx;
      if (found == side.index.end()) {
        if (total_nodes >= max_nodes) {
          capped = true;
          continue;
        }
        idx = side.nodes.size();
        side.nodes.push_back({sig, node, m, side.depth + 1});
        side.index.emplace(sig, idx);
        ++total_nodes;
        next.emplace_back(idx, std::move(child));
      } else {
        continue;
      }
      if (other) {
        auto hit = other->index.find(sig);
        if (hit != other->index.end()) {
          const std::size_t len = side.depth + 1 + other->nodes[hit->second].depth;
          if (!best || len < best->length)
            best = side_is_a ? Meeting{idx, hit->second, len} : Meeting{hit->second, idx, len};
        }
      }
    }
  }
  side.frontier = std::move(next);
  ++side.depth;
  return !capped;
}

}  // namespace

ConnectResult bfs_connect(const Triangulation& a, const Triangulation& b, const SearchBudget& budget) {
  require_census_valid(a);
  require_census_valid(b);
  ConnectResult result;
  const IsoSig sig_a = canonical_signature(a);
  const IsoSig sig_b = canonical_signature(b);
  if (sig_a == sig_b) {
    result.status = ConnectStatus::Connected;
    result.path = PachnerPath{{}, sig_a, sig_b};
    result.reason = "isomorphic";
    return result;
  }
  const ManifoldInvariants ia = manifold_invariants(a);
  const ManifoldInvariants ib = manifold_invariants(b);
  if (ia != ib) {
    result.status = ConnectStatus::Distinct;
    std::vector<std::string> diffs;
    if (ia.cusps != ib.cusps)
      diffs.push_back("cusps differ: " + std::to_string(ia.cusps) + " vs " + std::to_string(ib.cusps));
    if (ia.orientable != ib.orientable) diffs.push_back("orientability differs");
    if (ia.homology != ib.homology)
      diffs.push_back("H1 differs: " + ia.homology.str() + " vs " + ib.homology.str());
    for (const auto& d : diffs) result.reason += (result.reason.empty() ? "" : "; ") + d;
    return result;
  }

  const std::size_t max_tets = std::max(a.size(), b.size()) + budget.max_extra_tets;
  Side from_a(a, sig_a.text);
  Side from_b(b, sig_b.text);
  std::size_t total = 2;
  std::optional<Meeting> meet;
  bool capped = false;
  const bool bidirectional = budget.max_depth > 2;

  while (!meet && from_a.depth + from_b.depth < budget.max_depth) {
    const bool grow_a = !bidirectional || from_a.depth <= from_b.depth;
    Side& side = grow_a ? from_a : from_b;
    if (side.frontier.empty()) break;
    if (!expand_level(side, &(grow_a ? from_b : from_a), grow_a, max_tets, total, budget.max_nodes, meet))
      capped = true;
    if (capped && !meet) break;
  }
  result.visited = total;
  if (!meet) {
    result.status = ConnectStatus::NotFound;
    result.reason = capped ? "node cap reached" : "no path within budget";
    return result;
  }

  // Forward half straight from the tree; backward half recovered by
  // finding, at each step, the first move reaching the next signature.
  std::vector<MoveDescriptor> moves = from_a.moves_to(meet->a_node);
  Triangulation cur = replay(a, moves);
  for (const std::string& target : from_b.signatures_to_root(meet->b_node)) {
    bool stepped = false;
    for (const MoveDescriptor& m : pachner_moves(cur, max_tets)) {
      Triangulation next = apply_move(cur, m);
      if (canonical_signature(next).text == target) {
        moves.push_back(m);
        cur = std::move(next);
        stepped = true;
        break;
      }
    }
    if (!stepped) throw std::logic_error("could not retrace the backward search");
  }
  if (canonical_signature(cur) != sig_b) throw std::logic_error("path does not replay to the target");
  result.status = ConnectStatus::Connected;
  result.path = PachnerPath{std::move(moves), sig_a, sig_b};
  result.reason = "path found";
  return result;
}

std::vector<DedupeGroup> dedupe_census(const std::vector<CensusEntry>& entries, const SearchBudget& budget) {
  struct Prepared {
    const CensusEntry* entry;
    std::string sig;
    ManifoldInvariants inv;
  };
  std::vector<Prepared> items;
  for (const auto& e : entries) {
    require_census_valid(e.tri);
    items.push_back({&e, canonical_signature(e.tri).text, manifold_invariants(e.tri)});
  }
  std::sort(items.begin(), items.end(), [](const Prepared& x, const Prepared& y) {
    return std::tie(x.entry->name, x.sig) < std::tie(y.entry->name, y.sig);
  });

  ParityUnionFind sets(items.size());
  std::vector<DedupeWitness> witnesses;
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (sets.same(i, j) || !(items[i].inv == items[j].inv)) continue;
      const auto r = bfs_connect(items[i].entry->tri, items[j].entry->tri, budget);
      if (r.status != ConnectStatus::Connected) continue;
      sets.merge(i, j);
      witnesses.push_back({items[i].entry->name, items[j].entry->name, *r.path});
    }

  std::map<std::size_t, DedupeGroup> by_root;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::size_t root = sets.find(i).first;
    if (!by_root.count(root)) order.push_back(root);
    by_root[root].members.push_back(items[i].entry->name);
  }
  for (auto& w : witnesses) {
    for (std::size_t i = 0; i < items.size(); ++i)
      if (items[i].entry->name == w.from) {
        by_root[sets.find(i).first].witnesses.push_back(w);
        break;
      }
  }
  std::vector<DedupeGroup> groups;
  for (std::size_t root : order) groups.push_back(std::move(by_root[root]));
  return groups;
}

}  // namespace cusp
