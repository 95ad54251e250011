#include <doctest.h>

#include <cctype>
#include <random>
#include <set>
#include <stdexcept>

#include "cusp/builders.hpp"
#include "cusp/isosig.hpp"
#include "cusp/moves.hpp"
#include "cusp/skeleton.hpp"
#include "support.hpp"

using namespace cusp;

TEST_CASE("signature is invariant under 100 relabelings") {
  const auto x101 = build_x101().tri;
  const auto sig = canonical_signature(x101);
  for (std::uint64_t s = 0; s < 100; ++s) CHECK(canonical_signature(relabel(x101, s)) == sig);
}

TEST_CASE("signature alphabet and layout") {
  for (const auto& [name, tri] : testing::built_triangulations()) {
    CAPTURE(name);
    const auto sig = canonical_signature(tri).text;
    for (char c : sig)
      CHECK((std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-'));
    // one width symbol, width symbols for n, then 2n first-side gluings
    CHECK(sig.size() == 2 + 2 * tri.size() * 2);
    CHECK(sig[0] == 'b');
  }
  CHECK(canonical_signature(figure_eight()).text == "bcbabibhbt");
}

TEST_CASE("decode round trip") {
  for (const auto& [name, tri] : testing::built_triangulations()) {
    CAPTURE(name);
    Isomorphism to_canon;
    const auto sig = canonical_signature(tri, to_canon);
    const auto decoded = decode_signature(sig.text);
    CHECK(transports(to_canon, tri, decoded));
    CHECK(canonical_signature(decoded) == sig);
    CHECK(are_isomorphic(decoded, tri).has_value());
  }
  CHECK_THROWS_AS(decode_signature(""), std::invalid_argument);
  CHECK_THROWS_AS(decode_signature("b*"), std::invalid_argument);
  CHECK_THROWS_AS(decode_signature("bcbabibh"), std::invalid_argument);
}

TEST_CASE("rejects inputs without a canonical form") {
  Triangulation open(1);
  CHECK_THROWS_AS(canonical_signature(open), std::invalid_argument);
  Triangulation two(2);
  two.join(0, 0, 0, Perm4(1, 0, 3, 2));
  two.join(0, 2, 0, Perm4(0, 1, 3, 2));
  two.join(1, 0, 1, Perm4(1, 0, 3, 2));
  two.join(1, 2, 1, Perm4(0, 1, 3, 2));
  CHECK_THROWS_AS(canonical_signature(two), std::invalid_argument);
}

TEST_CASE("relabel is deterministic") {
  const auto t = build_x101().tri;
  CHECK(relabel(t, 7) == relabel(t, 7));
  CHECK(random_isomorphism(6, 7) == random_isomorphism(6, 7));
}

TEST_CASE("signature equality agrees with isomorphism on randomized pairs") {
  // pool of pairwise non-isomorphic triangulations: built ones plus 2-3 images
  std::vector<Triangulation> pool;
  for (const auto& n : testing::built_triangulations()) pool.push_back(n.tri);
  const auto x101 = build_x101().tri;
  for (std::size_t f = 0; f < x101.faces().size(); f += 3)
    if (can_pachner_23(x101, f)) pool.push_back(pachner_23(x101, f));

  std::mt19937_64 rng(2024);
  int pairs = 0, positive = 0;
  for (int k = 0; k < 240; ++k) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    const auto ra = relabel(a, rng());
    const auto rb = relabel(b, rng());
    const bool same_sig = canonical_signature(ra) == canonical_signature(rb);
    const auto w = are_isomorphic(ra, rb);
    CHECK(same_sig == w.has_value());
    if (w) {
      CHECK(transports(*w, ra, rb));
      CHECK(canonical_signature(a) == canonical_signature(b));
      ++positive;
    }
    ++pairs;
  }
  CHECK(pairs >= 200);
  CHECK(positive > 0);
  CHECK(positive < pairs);
  CHECK_FALSE(are_isomorphic(x101, build_x103(0)).has_value());
}

TEST_CASE("witness recovers the relabeling up to automorphism, and witnesses compose") {
  const auto a = build_x101().tri;
  const auto sigma = random_isomorphism(a.size(), 11);
  const auto b = apply(sigma, a);
  const auto w = are_isomorphic(a, b);
  REQUIRE(w);
  CHECK(transports(*w, a, b));
  // w^-1 . sigma is an automorphism of a
  const auto aut = w->inverse().compose(sigma);
  CHECK(transports(aut, a, a));

  const auto c = relabel(b, 12);
  const auto w2 = are_isomorphic(b, c);
  REQUIRE(w2);
  CHECK(transports(w2->compose(*w), a, c));
}
