#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace cusp {

/// A permutation of the vertex labels {0,1,2,3} of a tetrahedron.
///
/// Composition follows function notation: (p * q)[i] == p[q[i]].
/// Permutations are numbered 0..23 in lexicographic order of their image
/// tuples, so index 0 is the identity and index 23 is 3210.
class Perm4 {
 public:
  constexpr Perm4() : images_{0, 1, 2, 3} {}

  /// Throws std::invalid_argument unless the images form a permutation.
  Perm4(int a, int b, int c, int d);

  static bool is_permutation(const std::array<int, 4>& images);
  static Perm4 from_index(int index);
  /// Transposition of two labels.
  static Perm4 swap(int a, int b);

  int index() const;
  int operator[](int label) const { return images_[label]; }
  /// Label mapped onto `image`.
  int preimage(int image) const;

  Perm4 operator*(const Perm4& other) const;
  Perm4 inverse() const;
  /// +1 for even permutations, -1 for odd.
  int sign() const;
  bool is_identity() const { return index() == 0; }

  /// The four image digits, e.g. "1302".
  std::string str() const;

  friend bool operator==(const Perm4&, const Perm4&) = default;
  friend auto operator<=>(const Perm4& a, const Perm4& b) { return a.images_ <=> b.images_; }

 private:
  std::array<std::uint8_t, 4> images_;
};

}  // namespace cusp
