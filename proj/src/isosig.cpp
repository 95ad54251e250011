#include "cusp/isosig.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace cusp {

namespace {

constexpr std::string_view kAlphabet =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-";

int symbol_value(char c) {
  const auto pos = kAlphabet.find(c);
  if (pos == std::string_view::npos)
    throw std::invalid_argument(std::string("invalid signature symbol '") + c + "'");
  return static_cast<int>(pos);
}

int digits_for(std::size_t n) {
  int w = 1;
  std::size_t cap = 64;
  while (n >= cap) {
    ++w;
    cap *= 64;
  }
  return w;
}

void put_number(std::string& out, std::size_t value, int width) {
  for (int i = width - 1; i >= 0; --i) out += kAlphabet[(value >> (6 * i)) & 63];
}

// Canonical relabeling from one start: tetrahedron `start` becomes 0 with
// vertex maps new -> old given by `start_map`. Fills `codes` with the
// (target, perm) pairs. Stops early and returns false once the sequence
// exceeds `best`.
struct Candidate {
  std::vector<std::size_t> codes;
  std::vector<std::size_t> old_of_new;
  std::vector<Perm4> new_to_old;
};

bool run_candidate(const Triangulation& tri, std::size_t start, Perm4 start_map,
                   const std::vector<std::size_t>* best, Candidate& cand) {
  const std::size_t n = tri.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> new_of_old(n, kUnset);
  cand.codes.clear();
  cand.old_of_new.assign(1, start);
  cand.new_to_old.assign(1, start_map);
  new_of_old[start] = 0;
  std::vector<std::array<char, 4>> done(n, {0, 0, 0, 0});
  bool tied = best != nullptr;

  auto emit = [&](std::size_t value) {
    const std::size_t pos = cand.codes.size();
    cand.codes.push_back(value);
    if (tied) {
      const std::size_t b = (*best)[pos];
      if (value > b) return false;
      if (value < b) tied = false;
    }
    return true;
  };

  for (std::size_t i = 0; i < cand.old_of_new.size(); ++i) {
    const std::size_t old = cand.old_of_new[i];
    const Perm4 map = cand.new_to_old[i];
    for (int f = 0; f < 4; ++f) {
      if (done[i][f]) continue;
      const auto& g = tri.gluing(old, map[f]);
      std::size_t j = new_of_old[g->tet];
      if (j == kUnset) {
        j = cand.old_of_new.size();
        new_of_old[g->tet] = j;
        cand.old_of_new.push_back(g->tet);
        cand.new_to_old.push_back(g->perm * map);
      }
      const Perm4 perm = cand.new_to_old[j].inverse() * g->perm * map;
      done[i][f] = 1;
      done[j][perm[f]] = 1;
      if (!emit(j) || !emit(static_cast<std::size_t>(perm.index()))) return false;
    }
  }
  return true;
}

void require_signable(const Triangulation& tri) {
  if (tri.empty()) throw std::invalid_argument("cannot sign an empty triangulation");
  if (!tri.is_involutive()) throw std::invalid_argument("gluing table is not involutive");
  if (!tri.is_closed()) throw std::invalid_argument("signatures need every face glued");
  if (!tri.is_connected()) throw std::invalid_argument("signatures need a connected triangulation");
}

}  // namespace

IsoSig canonical_signature(const Triangulation& tri, Isomorphism& to_canonical) {
  require_signable(tri);
  const std::size_t n = tri.size();
  Candidate best, cand;
  bool have = false;
  for (std::size_t start = 0; start < n; ++start)
    for (int p = 0; p < 24; ++p) {
      if (!run_candidate(tri, start, Perm4::from_index(p), have ? &best.codes : nullptr, cand))
        continue;
      if (!have || cand.codes < best.codes) {
        std::swap(best, cand);
        have = true;
      }
    }

  to_canonical.tet_map.assign(n, 0);
  to_canonical.vertex_maps.assign(n, Perm4());
  for (std::size_t i = 0; i < n; ++i) {
    to_canonical.tet_map[best.old_of_new[i]] = i;
    to_canonical.vertex_maps[best.old_of_new[i]] = best.new_to_old[i].inverse();
  }

  const int w = digits_for(n);
  IsoSig sig;
  sig.text += kAlphabet[w];
  put_number(sig.text, n, w);
  for (std::size_t k = 0; k < best.codes.size(); k += 2) {
    put_number(sig.text, best.codes[k], w);
    put_number(sig.text, best.codes[k + 1], 1);
  }
  return sig;
}

IsoSig canonical_signature(const Triangulation& tri) {
  Isomorphism unused;
  return canonical_signature(tri, unused);
}

Triangulation decode_signature(std::string_view text) {
  std::size_t pos = 0;
  auto read = [&](int width) {
    if (pos + width > text.size()) throw std::invalid_argument("signature is truncated");
    std::size_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 6) | static_cast<std::size_t>(symbol_value(text[pos++]));
    return v;
  };
  const int w = static_cast<int>(read(1));
  if (w < 1 || w > 8) throw std::invalid_argument("bad signature width");
  const std::size_t n = read(w);
  if (n == 0) throw std::invalid_argument("signature has no tetrahedra");
  Triangulation tri(n);
  std::size_t next = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= next) throw std::invalid_argument("signature describes a disconnected triangulation");
    for (int f = 0; f < 4; ++f) {
      if (tri.gluing(i, f)) continue;
      const std::size_t j = read(w);
      const std::size_t p = read(1);
      if (j >= n || j > next) throw std::invalid_argument("signature target out of range");
      if (p >= 24) throw std::invalid_argument("signature permutation out of range");
      if (j == next) ++next;
      tri.join(i, f, j, Perm4::from_index(static_cast<int>(p)));
    }
  }
  if (pos != text.size()) throw std::invalid_argument("trailing symbols in signature");
  return tri;
}

std::optional<Isomorphism> are_isomorphic(const Triangulation& a, const Triangulation& b) {
  if (a.size() != b.size()) return std::nullopt;
  Isomorphism to_a, to_b;
  if (canonical_signature(a, to_a) != canonical_signature(b, to_b)) return std::nullopt;
  Isomorphism witness = to_b.inverse().compose(to_a);
  if (!transports(witness, a, b)) throw std::logic_error("signature witness failed to transport");
  return witness;
}

Isomorphism random_isomorphism(std::size_t n, std::uint64_t seed) {
  // Raw engine output only, so the result is identical on every platform.
  std::mt19937_64 rng(seed);
  Isomorphism iso = Isomorphism::identity(n);
  for (std::size_t i = n; i > 1; --i) std::swap(iso.tet_map[i - 1], iso.tet_map[rng() % i]);
  for (auto& p : iso.vertex_maps) p = Perm4::from_index(static_cast<int>(rng() % 24));
  return iso;
}

Triangulation relabel(const Triangulation& tri, std::uint64_t seed) {
  return apply(random_isomorphism(tri.size(), seed), tri);
}

}  // namespace cusp
