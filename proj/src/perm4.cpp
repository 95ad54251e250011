#include "cusp/perm4.hpp"

#include <stdexcept>

namespace cusp {

namespace {

constexpr std::array<std::array<std::uint8_t, 4>, 24> make_table() {
  std::array<std::array<std::uint8_t, 4>, 24> table{};
  int k = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        if (a == b || a == c || b == c) continue;
        const int d = 6 - a - b - c;
        table[k++] = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                      static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)};
      }
  return table;
}

constexpr auto kTable = make_table();

}  // namespace

Perm4::Perm4(int a, int b, int c, int d) {
  if (!is_permutation({a, b, c, d}))
    throw std::invalid_argument("not a permutation of {0,1,2,3}: " + std::to_string(a) +
                                std::to_string(b) + std::to_string(c) + std::to_string(d));
  images_ = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
             static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)};
}

bool Perm4::is_permutation(const std::array<int, 4>& images) {
  unsigned seen = 0;
  for (int x : images) {
    if (x < 0 || x > 3) return false;
    seen |= 1u << x;
  }
  return seen == 0xFu;
}

Perm4 Perm4::from_index(int index) {
  if (index < 0 || index >= 24) throw std::out_of_range("permutation index out of range");
  const auto& t = kTable[index];
  return Perm4(t[0], t[1], t[2], t[3]);
}

Perm4 Perm4::swap(int a, int b) {
  std::array<int, 4> img{0, 1, 2, 3};
  std::swap(img[a], img[b]);
  return Perm4(img[0], img[1], img[2], img[3]);
}

int Perm4::index() const {
  // Lehmer code.
  int idx = 0;
  static constexpr int kFactorial[4] = {6, 2, 1, 1};
  for (int i = 0; i < 4; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < 4; ++j)
      if (images_[j] < images_[i]) ++smaller;
    idx += smaller * kFactorial[i];
  }
  return idx;
}

int Perm4::preimage(int image) const {
  for (int i = 0; i < 4; ++i)
    if (images_[i] == image) return i;
  throw std::out_of_range("label out of range");
}

Perm4 Perm4::operator*(const Perm4& other) const {
  Perm4 out;
  for (int i = 0; i < 4; ++i) out.images_[i] = images_[other.images_[i]];
  return out;
}

Perm4 Perm4::inverse() const {
  Perm4 out;
  for (int i = 0; i < 4; ++i) out.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

int Perm4::sign() const {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (images_[i] > images_[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

std::string Perm4::str() const {
  std::string s(4, '0');
  for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + images_[i]);
  return s;
}

}  // namespace cusp
