#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "cusp/builders.hpp"
#include "cusp/geom.hpp"
#include "cusp/skeleton.hpp"

namespace cusp {

std::string to_string(VolumeStatus s) {
  switch (s) {
    case VolumeStatus::InteriorMax: return "interior-max";
    case VolumeStatus::BoundaryMax: return "boundary-max";
    case VolumeStatus::Infeasible: return "infeasible";
    case VolumeStatus::NotConverged: return "not-converged";
  }
  return "?";
}

namespace {

// Orthonormal basis of the null space of the equality rows restricted to
// the given columns.
Eigen::MatrixXd null_space(const AngleSystem& system, const std::vector<std::size_t>& cols) {
  const std::size_t n = cols.size();
  Eigen::MatrixXd a(system.rows.size(), n);
  for (std::size_t r = 0; r < system.rows.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) a(r, j) = system.rows[r][cols[j]];
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  const Eigen::MatrixXd kernel = lu.kernel();
  if (lu.rank() == static_cast<Eigen::Index>(n)) return Eigen::MatrixXd(n, 0);
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(kernel);
  return qr.householderQ() * Eigen::MatrixXd::Identity(n, kernel.cols());
}

double sum_lobachevsky(const Eigen::VectorXd& x) {
  double v = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) v += lobachevsky(x(i));
  return v;
}

void fill_diagnostics(const AngleSystem& system, const VolumeOptions& opts, VolumeResult& r) {
  r.tet_residual = system.tet_residual(r.angles);
  r.edge_residual = system.edge_residual(r.angles);
  r.min_angle = r.angles.empty() ? 0.0 : *std::min_element(r.angles.begin(), r.angles.end());
  r.near_zero.clear();
  for (std::size_t i = 0; i < r.angles.size(); ++i)
    if (r.angles[i] < opts.interior_threshold) r.near_zero.push_back({i / 3, static_cast<int>(i % 3)});
}

}  // namespace

VolumeResult maximize_volume(const AngleSystem& system, const VolumeOptions& opts) {
  VolumeResult result;
  std::optional<PolytopeFace> start;
  if (opts.start) {
    if (opts.start->size() != system.variables() || system.residual(*opts.start) > 1e-9)
      throw std::invalid_argument("start point does not satisfy the angle equations");
    start = PolytopeFace{*opts.start, {}};
    for (std::size_t j = 0; j < opts.start->size(); ++j) {
      if ((*opts.start)[j] < 0) throw std::invalid_argument("start point has a negative angle");
      if ((*opts.start)[j] == 0) start->forced_zero.push_back(j);
    }
  } else {
    start = relative_interior_point(system);
  }
  if (!start) {
    result.status = VolumeStatus::Infeasible;
    return result;
  }
  // Angles forced to zero stay there; Lambda(0) = 0, so they drop out.
  std::vector<char> pinned(system.variables(), 0);
  for (std::size_t j : start->forced_zero) pinned[j] = 1;
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < system.variables(); ++j)
    if (!pinned[j]) cols.push_back(j);
  const std::size_t n = cols.size();
  const Eigen::MatrixXd z = null_space(system, cols);
  Eigen::VectorXd x(n);
  for (std::size_t j = 0; j < n; ++j) x(j) = start->point[cols[j]];
  double vol = sum_lobachevsky(x);
  if (opts.record_trace) result.trace.push_back(vol);

  bool converged = false;
  std::size_t iter = 0;
  double grad_norm = 0.0;
  for (; iter < opts.max_iterations; ++iter) {
    Eigen::VectorXd g(n);
    Eigen::VectorXd curvature(n);  // minus the Hessian diagonal
    for (std::size_t i = 0; i < n; ++i) {
      g(i) = lobachevsky_derivative(x(i));
      curvature(i) = 1.0 / std::tan(x(i));
    }
    const Eigen::VectorXd reduced = z.transpose() * g;
    grad_norm = reduced.norm();
    if (grad_norm < opts.gradient_tol) {
      converged = true;
      break;
    }
    // Newton direction in the null space; the reduced Hessian is negative
    // definite on the angle polytope. Fall back to the projected gradient.
    Eigen::VectorXd dir = z * reduced;
    const Eigen::MatrixXd m = z.transpose() * curvature.asDiagonal() * z;
    const Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() == Eigen::Success) {
      const Eigen::VectorXd newton = z * llt.solve(reduced);
      if (g.dot(newton) > 0) dir = newton;
    }
    const double slope = g.dot(dir);
    if (!(slope > 0)) {
      converged = true;
      break;
    }

    // Largest step keeping every angle positive.
    double alpha = 1.0;
    for (std::size_t i = 0; i < n; ++i)
      if (dir(i) < 0) alpha = std::min(alpha, -0.99 * x(i) / dir(i));
    bool accepted = false;
    double next_vol = vol;
    Eigen::VectorXd next;
    while (alpha > 1e-18) {
      next = x + alpha * dir;
      if (next.minCoeff() > 0) {
        next_vol = sum_lobachevsky(next);
        if (next_vol >= vol + 1e-4 * alpha * slope) {
          accepted = true;
          break;
        }
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      converged = true;
      break;
    }
    const double gain = next_vol - vol;
    x = next;
    vol = next_vol;
    if (opts.record_trace) result.trace.push_back(vol);
    if (gain < opts.volume_tol) {
      ++iter;
      converged = true;
      break;
    }
  }

  result.volume = vol;
  result.angles.assign(system.variables(), 0.0);
  for (std::size_t j = 0; j < n; ++j) result.angles[cols[j]] = x(j);
  result.iterations = iter;
  result.gradient_norm = grad_norm;
  fill_diagnostics(system, opts, result);
  if (!converged) result.status = VolumeStatus::NotConverged;
  else if (!result.near_zero.empty()) result.status = VolumeStatus::BoundaryMax;
  else result.status = VolumeStatus::InteriorMax;
  return result;
}

VolumeResult max_volume(const Triangulation& tri, const VolumeOptions& opts) {
  const AngleSystem system = angle_equations(tri);
  if (is_orientable(tri)) return maximize_volume(system, opts);

  const Cover cover = double_cover_with_projection(tri);
  VolumeOptions lifted_opts = opts;
  if (opts.start) {
    // Lift the start point to both sheets.
    std::vector<double> lifted_start(3 * cover.tri.size());
    for (std::size_t i = 0; i < cover.tri.size(); ++i)
      for (int k = 0; k < 3; ++k) lifted_start[3 * i + k] = (*opts.start)[3 * cover.projection[i] + k];
    lifted_opts.start = std::move(lifted_start);
  }
  const VolumeResult lifted = maximize_volume(angle_equations(cover.tri), lifted_opts);
  VolumeResult r = lifted;
  r.trace.clear();
  for (double v : lifted.trace) r.trace.push_back(v / 2);
  r.volume = lifted.volume / 2;
  // The maximizer is unique, hence invariant under the deck transformation;
  // average the two lifts of each tetrahedron.
  const std::size_t n = tri.size();
  r.angles.assign(3 * n, 0.0);
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (int k = 0; k < 3; ++k) r.angles[3 * cover.projection[i] + k] += lifted.angles.empty() ? 0.0 : 0.5 * lifted.angles[3 * i + k];
  if (lifted.status != VolumeStatus::Infeasible) fill_diagnostics(system, opts, r);

  VolumeOptions direct_opts = opts;
  direct_opts.record_trace = false;
  direct_opts.start.reset();
  const VolumeResult direct = maximize_volume(system, direct_opts);
  if (direct.status != VolumeStatus::Infeasible) r.direct_volume = direct.volume;
  return r;
}

}  // namespace cusp
