#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "cusp/geom.hpp"
#include "cusp/skeleton.hpp"

namespace cusp {

namespace {

double row_residual(const AngleSystem& s, std::size_t r, const std::vector<double>& x) {
  double acc = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) acc += s.rows[r][j] * x[j];
  return std::fabs(acc - s.rhs_pi[r] * kPi);
}

constexpr double kEps = 1e-10;

// Dense two-phase simplex with Bland's rule: maximize c.x subject to
// A x = b, x >= 0. Returns nothing if infeasible. The programs here are
// bounded by construction.
std::optional<std::vector<double>> simplex(std::vector<std::vector<double>> a, std::vector<double> b,
                                           const std::vector<double>& c) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
  std::size_t m = a.size();
  // Columns: n structural, m artificial, then rhs.
  const std::size_t width = n + m;
  std::vector<std::vector<double>> t(m, std::vector<double>(width + 1, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::copy(a[i].begin(), a[i].end(), t[i].begin());
    t[i][n + i] = 1.0;
    t[i][width] = b[i];
    basis[i] = n + i;
  }
  std::vector<char> allowed(width, 1);

  auto pivot = [&](std::size_t r, std::size_t col, std::vector<double>& obj) {
    const double p = t[r][col];
    for (auto& v : t[r]) v /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][col] == 0.0) continue;
      const double f = t[i][col];
      for (std::size_t j = 0; j <= width; ++j) t[i][j] -= f * t[r][j];
    }
    const double f = obj[col];
    if (f != 0.0)
      for (std::size_t j = 0; j <= width; ++j) obj[j] -= f * t[r][j];
    basis[r] = col;
  };

  auto run = [&](const std::vector<double>& cost) {
    std::vector<double> obj(width + 1, 0.0);
    for (std::size_t j = 0; j < width; ++j) {
      if (!allowed[j]) continue;
      obj[j] = cost[j];
      for (std::size_t i = 0; i < t.size(); ++i) obj[j] -= cost[basis[i]] * t[i][j];
    }
    for (;;) {
      std::size_t enter = width;
      for (std::size_t j = 0; j < width; ++j)
        if (allowed[j] && obj[j] > kEps) {
          enter = j;
          break;
        }
      if (enter == width) return;
      std::size_t leave = t.size();
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] <= kEps) continue;
        const double ratio = t[i][width] / t[i][enter];
        const bool better = leave == t.size() || ratio < best - kEps;
        const bool tie = !better && ratio <= best + kEps && basis[i] < basis[leave];
        if (better || tie) {
          best = std::min(best, ratio);
          leave = i;
        }
      }
      if (leave == t.size()) throw std::logic_error("linear program is unbounded");
      pivot(leave, enter, obj);
    }
  };

  std::vector<double> phase1(width, 0.0);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1.0;
  run(phase1);
  double infeasibility = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (basis[i] >= n) infeasibility += t[i][width];
  if (infeasibility > 1e-8) return std::nullopt;

  // Drive artificials out of the basis, dropping redundant rows.
  for (std::size_t i = 0; i < t.size();) {
    if (basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j)
      if (std::fabs(t[i][j]) > 1e-9) {
        col = j;
        break;
      }
    if (col == n) {
      t.erase(t.begin() + static_cast<long>(i));
      basis.erase(basis.begin() + static_cast<long>(i));
      continue;
    }
    std::vector<double> dummy(width + 1, 0.0);
    pivot(i, col, dummy);
    ++i;
  }
  for (std::size_t j = n; j < width; ++j) allowed[j] = 0;

  std::vector<double> phase2(width, 0.0);
  std::copy(c.begin(), c.end(), phase2.begin());
  run(phase2);

  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (basis[i] < n) x[basis[i]] = t[i][width];
  return x;
}

}  // namespace

double AngleSystem::residual(const std::vector<double>& x) const {
  double worst = 0.0;
  for (std::size_t r = 0; r < rows.size(); ++r) worst = std::max(worst, row_residual(*this, r, x));
  return worst;
}

double AngleSystem::tet_residual(const std::vector<double>& x) const {
  double worst = 0.0;
  for (std::size_t r = 0; r < tet_rows; ++r) worst = std::max(worst, row_residual(*this, r, x));
  return worst;
}

double AngleSystem::edge_residual(const std::vector<double>& x) const {
  double worst = 0.0;
  for (std::size_t r = tet_rows; r < rows.size(); ++r) worst = std::max(worst, row_residual(*this, r, x));
  return worst;
}

AngleSystem angle_equations(const Triangulation& tri) {
  require_census_valid(tri);
  AngleSystem s;
  s.tetrahedra = tri.size();
  const std::size_t vars = s.variables();
  for (std::size_t t = 0; t < tri.size(); ++t) {
    std::vector<int> row(vars, 0);
    for (int k = 0; k < 3; ++k) row[3 * t + k] = 1;
    s.rows.push_back(std::move(row));
    s.rhs_pi.push_back(1);
  }
  s.tet_rows = tri.size();
  const SkeletonReport sk = skeleton(tri);
  for (const EdgeClass& ec : sk.edges) {
    std::vector<int> row(vars, 0);
    for (const EdgeMember& m : ec.members) row[3 * m.tet + angle_of_edge(m.edge)] += 1;
    s.rows.push_back(std::move(row));
    s.rhs_pi.push_back(2);
  }
  return s;
}

namespace {

// Max-min LP over the variables marked free (others pinned at zero), then a
// least-norm correction back onto the equalities.
std::optional<std::vector<double>> maxmin_point(const AngleSystem& system, const std::vector<char>& free,
                                                double margin) {
  const std::size_t n = system.variables();
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < n; ++j)
    if (free[j]) cols.push_back(j);
  const std::size_t k = cols.size();
  // Free angles x = y + s with y >= 0, s >= 0; maximize s.
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (std::size_t r = 0; r < system.rows.size(); ++r) {
    std::vector<double> row(k + 1, 0.0);
    double total = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
      row[c] = system.rows[r][cols[c]];
      total += row[c];
    }
    row[k] = total;
    a.push_back(std::move(row));
    b.push_back(system.rhs_pi[r] * kPi);
  }
  std::vector<double> cost(k + 1, 0.0);
  cost[k] = 1.0;
  const auto sol = simplex(a, b, cost);
  if (!sol || (*sol)[k] < margin) return std::nullopt;

  Eigen::MatrixXd m(system.rows.size(), k);
  Eigen::VectorXd rhs(system.rows.size());
  Eigen::VectorXd x(k);
  for (std::size_t r = 0; r < system.rows.size(); ++r) {
    for (std::size_t c = 0; c < k; ++c) m(r, c) = system.rows[r][cols[c]];
    rhs(r) = system.rhs_pi[r] * kPi;
  }
  for (std::size_t c = 0; c < k; ++c) x(c) = (*sol)[c] + (*sol)[k];
  const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(m);
  for (int pass = 0; pass < 2; ++pass) x -= cod.solve(m * x - rhs);
  if (k > 0 && x.minCoeff() < margin) return std::nullopt;

  std::vector<double> out(n, 0.0);
  for (std::size_t c = 0; c < k; ++c) out[cols[c]] = x(c);
  return out;
}

}  // namespace

std::optional<std::vector<double>> feasible_point(const AngleSystem& system, double margin) {
  return maxmin_point(system, std::vector<char>(system.variables(), 1), margin);
}

std::optional<PolytopeFace> relative_interior_point(const AngleSystem& system, double margin) {
  const std::size_t n = system.variables();
  if (auto p = feasible_point(system, margin)) return PolytopeFace{*p, {}};

  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (std::size_t r = 0; r < system.rows.size(); ++r) {
    a.emplace_back(system.rows[r].begin(), system.rows[r].end());
    b.push_back(system.rhs_pi[r] * kPi);
  }
  // An angle is forced to zero iff its own maximum over the polytope is zero.
  std::vector<char> free(n, 1);
  PolytopeFace face;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> cost(n, 0.0);
    cost[j] = 1.0;
    const auto sol = simplex(a, b, cost);
    if (!sol) return std::nullopt;
    if ((*sol)[j] < margin) {
      free[j] = 0;
      face.forced_zero.push_back(j);
    }
  }
  auto p = maxmin_point(system, free, margin);
  if (!p) return std::nullopt;
  face.point = std::move(*p);
  return face;
}

double volume_functional(const std::vector<double>& angles) {
  double v = 0.0;
  for (double a : angles) v += lobachevsky(a);
  return v;
}

std::vector<double> volume_gradient(const std::vector<double>& angles) {
  std::vector<double> g(angles.size());
  for (std::size_t i = 0; i < angles.size(); ++i) g[i] = lobachevsky_derivative(angles[i]);
  return g;
}

}  // namespace cusp
