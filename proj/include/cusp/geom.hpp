#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cusp/triangulation.hpp"

namespace cusp {

inline constexpr double kPi = 3.14159265358979323846;

/// Lobachevsky function, -integral_0^theta log|2 sin t| dt. Odd and
/// pi-periodic; accurate to about 1e-15 absolute.
double lobachevsky(double theta);

/// Derivative -log|2 sin theta|; +infinity at multiples of pi.
double lobachevsky_derivative(double theta);

/// Linear angle-structure equations. Variable 3t+k is the dihedral angle of
/// tetrahedron t at edge pair k: k = 0 for edges 01/23, 1 for 02/13, 2 for
/// 03/12. Rows are exact integer combinations equal to rhs_pi[i] * pi.
struct AngleSystem {
  std::size_t tetrahedra = 0;
  std::size_t tet_rows = 0;  ///< first tet_rows rows are the a+b+c=pi rows
  std::vector<std::vector<int>> rows;
  std::vector<int> rhs_pi;

  std::size_t variables() const { return 3 * tetrahedra; }
  /// Largest |row . x - rhs| over all rows.
  double residual(const std::vector<double>& x) const;
  double tet_residual(const std::vector<double>& x) const;
  double edge_residual(const std::vector<double>& x) const;
};

/// Angle index (0..2) of tetrahedron edge e.
inline int angle_of_edge(int e) { return e < 5 - e ? e : 5 - e; }

/// Throws std::invalid_argument unless census-valid.
AngleSystem angle_equations(const Triangulation& tri);

/// Point of the angle polytope maximizing the smallest angle (linear
/// program, then projected back onto the equalities). Nothing when that
/// smallest angle would be below `margin`.
std::optional<std::vector<double>> feasible_point(const AngleSystem& system, double margin = 1e-9);

/// A point in the relative interior of the angle polytope together with the
/// angles that vanish on the whole polytope (flat directions forced by the
/// equations). The point maximizes the smallest of the remaining angles.
/// Nothing if the polytope is empty.
struct PolytopeFace {
  std::vector<double> point;
  std::vector<std::size_t> forced_zero;
};
std::optional<PolytopeFace> relative_interior_point(const AngleSystem& system, double margin = 1e-9);

/// Sum of Lobachevsky values over all angles.
double volume_functional(const std::vector<double>& angles);
std::vector<double> volume_gradient(const std::vector<double>& angles);

enum class VolumeStatus { InteriorMax, BoundaryMax, Infeasible, NotConverged };
std::string to_string(VolumeStatus s);

struct AngleRef {
  std::size_t tet = 0;
  int angle = 0;
};

struct VolumeOptions {
  /// Stop once the projected gradient norm falls below this.
  double gradient_tol = 1e-9;
  /// ... or the volume gain of an accepted step falls below this.
  double volume_tol = 1e-12;
  std::size_t max_iterations = 100000;
  /// Angles below this make the maximizer a boundary point.
  double interior_threshold = 1e-6;
  bool record_trace = false;
  /// Starting angles; must satisfy the equalities. Zero entries stay pinned.
  /// Defaults to relative_interior_point().
  std::optional<std::vector<double>> start;
};

struct VolumeResult {
  double volume = 0.0;
  /// Three angles per tetrahedron (see AngleSystem for ordering).
  std::vector<double> angles;
  VolumeStatus status = VolumeStatus::NotConverged;
  std::size_t iterations = 0;
  double gradient_norm = 0.0;
  double tet_residual = 0.0;
  double edge_residual = 0.0;
  double min_angle = 0.0;
  std::vector<AngleRef> near_zero;
  /// Volume after each accepted step when requested.
  std::vector<double> trace;
  /// For non-orientable input: the volume found by maximizing directly on
  /// the triangulation itself rather than on its double cover.
  std::optional<double> direct_volume;
};

/// Maximizes the volume functional over the angle polytope of `system`.
VolumeResult maximize_volume(const AngleSystem& system, const VolumeOptions& opts = {});

/// Maximum volume over angle structures. Non-orientable triangulations are
/// maximized on the orientation double cover and the result halved.
/// Throws std::invalid_argument unless census-valid.
VolumeResult max_volume(const Triangulation& tri, const VolumeOptions& opts = {});

}  // namespace cusp
