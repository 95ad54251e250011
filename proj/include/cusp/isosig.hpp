#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cusp/triangulation.hpp"

namespace cusp {

/// Canonical, relabeling-invariant text form of a closed connected
/// triangulation. Two triangulations have equal signatures exactly when they
/// are combinatorially isomorphic.
///
/// Layout, over the alphabet a-z A-Z 0-9 + - (values 0..63):
///   [w] [n: w symbols] then, for each gluing in canonical order,
///   [target tetrahedron: w symbols] [permutation index 0..23: 1 symbol]
/// where w is the number of base-64 digits needed for n, numbers are written
/// most significant digit first, and only the first side of each face pair
/// is written.
struct IsoSig {
  std::string text;

  friend bool operator==(const IsoSig&, const IsoSig&) = default;
  friend auto operator<=>(const IsoSig&, const IsoSig&) = default;
};

/// Throws std::invalid_argument on disconnected, non-involutive or bounded input.
IsoSig canonical_signature(const Triangulation& tri);

/// Same, also returning the isomorphism from `tri` onto decode(signature).
IsoSig canonical_signature(const Triangulation& tri, Isomorphism& to_canonical);

/// Rebuilds the canonical triangulation; throws std::invalid_argument on
/// malformed text.
Triangulation decode_signature(std::string_view text);

/// Witness isomorphism from a onto b, if one exists.
std::optional<Isomorphism> are_isomorphic(const Triangulation& a, const Triangulation& b);

/// A pseudorandom isomorphism on n tetrahedra, fixed by the seed.
Isomorphism random_isomorphism(std::size_t n, std::uint64_t seed);

/// apply(random_isomorphism(tri.size(), seed), tri).
Triangulation relabel(const Triangulation& tri, std::uint64_t seed);

}  // namespace cusp
