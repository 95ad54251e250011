#include "cusp/homology.hpp"

#include <map>
#include <stdexcept>

#include "cusp/skeleton.hpp"

namespace cusp {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, const std::vector<long>& row_major)
    : IntMatrix(rows, cols) {
  if (row_major.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = row_major[i];
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += k * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) += k * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) += k * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm r{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  IntMatrix& s = r.s;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry in the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (s(i, j) != 0 && (pi == rows || abs(s(i, j)) < abs(s(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return r;
      swap_rows(s, t, pi);
      swap_rows(r.u, t, pi);
      swap_cols(s, t, pj);
      swap_cols(r.v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        const Integer q = s(i, t) / s(t, t);
        add_row(s, i, t, -q);
        add_row(r.u, i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        const Integer q = s(t, j) / s(t, t);
        add_col(s, j, t, -q);
        add_col(r.v, j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s(i, j) % s(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row(s, t, bad, 1);
      add_row(r.u, t, bad, 1);
    }
    if (s(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) s(t, j) = -s(t, j);
      for (std::size_t j = 0; j < rows; ++j) r.u(t, j) = -r.u(t, j);
    }
  }
  return r;
}

std::vector<Integer> SmithForm::divisors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i)
    if (s(i, i) != 0) out.push_back(s(i, i));
  return out;
}

AbelianGroup AbelianGroup::from_relations(const IntMatrix& relations) {
  AbelianGroup g;
  const auto d = smith_normal_form(relations).divisors();
  g.rank = relations.cols() - d.size();
  for (const auto& x : d)
    if (x > 1) g.torsion.push_back(x);
  return g;
}

std::string AbelianGroup::str() const {
  std::string out;
  auto add = [&](const std::string& term) {
    if (!out.empty()) out += " + ";
    out += term;
  };
  if (rank == 1) add("Z");
  else if (rank > 1) add("Z^" + std::to_string(rank));
  for (const auto& d : torsion) add("Z_" + d.str());
  return out.empty() ? "0" : out;
}

IntMatrix SpinePresentation::abelianized() const {
  IntMatrix m(relators.size() + killed.size(), generators);
  for (std::size_t r = 0; r < relators.size(); ++r)
    for (const auto& sg : relators[r]) m(r, sg.generator) += sg.sign;
  for (std::size_t k = 0; k < killed.size(); ++k) m(relators.size() + k, killed[k]) = 1;
  return m;
}

SpinePresentation spine_presentation(const Triangulation& tri) {
  require_census_valid(tri);
  const auto faces = tri.faces();
  // (tet, face) -> generator crossed when leaving through it, with sign.
  std::map<FaceRef, SignedGenerator> crossing;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const FaceRef& f = faces[i];
    const auto& g = tri.gluing(f.tet, f.face);
    crossing[f] = {i, 1};
    crossing[FaceRef{g->tet, g->perm[f.face]}] = {i, -1};
  }

  SpinePresentation p;
  p.generators = faces.size();

  // Dual spanning tree by breadth-first search from tetrahedron 0.
  std::vector<char> seen(tri.size(), 0);
  std::vector<std::size_t> queue{0};
  seen[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::size_t t = queue[qi];
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (seen[g->tet]) continue;
      seen[g->tet] = 1;
      queue.push_back(g->tet);
      p.killed.push_back(crossing.at(FaceRef{t, f}).generator);
    }
  }

  const SkeletonReport sk = skeleton(tri);
  for (const EdgeClass& ec : sk.edges) {
    const EdgeMember& m = ec.members.front();
    const auto [a, b] = kEdgeVertices[m.edge];
    const auto [c, d] = kEdgeVertices[5 - m.edge];
    std::vector<SignedGenerator> rel;
    for (const EdgeStep& step : edge_walk(tri, EdgeStep{m.tet, Perm4(a, b, c, d)}))
      rel.push_back(crossing.at(FaceRef{step.tet, step.roles[3]}));
    p.relators.push_back(std::move(rel));
  }
  return p;
}

AbelianGroup first_homology(const Triangulation& tri) {
  return AbelianGroup::from_relations(spine_presentation(tri).abelianized());
}

}  // namespace cusp
