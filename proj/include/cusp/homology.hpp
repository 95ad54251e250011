#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cusp/triangulation.hpp"

namespace cusp {

using Integer = boost::multiprecision::cpp_int;

/// Dense matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, const std::vector<long>& row_major);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant (fraction-free elimination). Square input only.
Integer determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix s;
  IntMatrix u;  ///< unimodular, rows x rows
  IntMatrix v;  ///< unimodular, cols x cols

  /// Nonzero diagonal entries of s, in order.
  std::vector<Integer> divisors() const;
};

/// u * a * v == s, with s diagonal, non-negative, and each diagonal entry
/// dividing the next.
SmithForm smith_normal_form(const IntMatrix& a);

/// Finitely generated abelian group Z^rank + Z_d1 + ... + Z_dk, d1 | d2 | ...
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  /// Group Z^generators / (row space of relations).
  static AbelianGroup from_relations(const IntMatrix& relations);

  /// e.g. "Z + Z_2 + Z_2", "0" for the trivial group.
  std::string str() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// A generator crossed while walking around an edge: +1 when crossing the
/// face from its first side (as listed by Triangulation::faces()).
struct SignedGenerator {
  std::size_t generator = 0;
  int sign = 1;
};

/// Presentation of the fundamental group from the dual spine: one generator
/// per face, the faces of a dual spanning tree killed, one relator per edge.
struct SpinePresentation {
  std::size_t generators = 0;
  std::vector<std::size_t> killed;
  std::vector<std::vector<SignedGenerator>> relators;

  /// Exponent-sum matrix (relators, then one unit row per killed generator).
  IntMatrix abelianized() const;
};

/// Throws std::invalid_argument unless census-valid.
SpinePresentation spine_presentation(const Triangulation& tri);

AbelianGroup first_homology(const Triangulation& tri);

}  // namespace cusp
