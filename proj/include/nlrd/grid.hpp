#pragma once

// Equidistant 1D mesh with one ghost node beyond each end and the discrete
// operators built on it. The ghost nodes mirror the nearest interior value,
// which realizes the zero-flux boundary condition to first order.

#include <Eigen/Core>

#include "nlrd/errors.hpp"

namespace nlrd {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Index = Eigen::Index;

class Grid1D {
 public:
  // Spacing must tile [x_min, x_max] to within 1e-12 relative, and the grid
  // must have at least 3 interior nodes. Throws NonDivisibleSpacing.
  static Grid1D build(double x_min, double x_max, double dx);

  Index size() const { return n_; }
  double dx() const { return dx_; }
  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  double measure() const { return x_max_ - x_min_; }

  double node(Index i) const { return x_min_ + static_cast<double>(i) * dx_; }
  Vec nodes() const;

  // Trapezoid quadrature weights over the interior nodes: dx at inner nodes,
  // dx/2 at the two ends.
  Vec trapezoid_weights() const;

 private:
  Grid1D(double x_min, double x_max, double dx, Index n)
      : x_min_(x_min), x_max_(x_max), dx_(dx), n_(n) {}

  double x_min_;
  double x_max_;
  double dx_;
  Index n_;
};

// [f0, f0, f1, ..., f_{n-1}, f_{n-1}]: interior values framed by mirrored
// ghost values.
Vec ghost_extend(const Vec& f);

// Three-point second difference on the ghost-extended array. Boundary rows
// reduce to (f[1]-f[0])/dx^2 and (f[n-2]-f[n-1])/dx^2 under the mirror rule.
Vec laplacian_neumann(const Grid1D& g, const Vec& f);

// Conservative flux form of d/dx(psi du/dx) with arithmetic-mean face
// diffusivity; ghost psi mirrored like ghost_extend. Requires psi > 0
// nodally (NonpositiveDiffusivity otherwise). With constant psi this reduces
// exactly to psi * laplacian_neumann(u).
Vec div_psi_grad(const Grid1D& g, const Vec& u, const Vec& psi_nodes);

}  // namespace nlrd
