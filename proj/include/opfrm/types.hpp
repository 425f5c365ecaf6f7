#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace opfrm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntMatrix = Eigen::MatrixXi;

enum class BasisKind { bspline, ospline, symmlet };
enum class Padding { symmetric_halfpoint, periodic };

std::string to_string(BasisKind kind);
std::string to_string(Padding padding);
BasisKind basis_from_string(const std::string& s);
Padding padding_from_string(const std::string& s);

/// Ordinal functional outcomes on a shared time grid.
///
/// outcomes(i, t) is the observed level of subject i at grid point t, an
/// integer in {0, ..., n_levels-1}. covariates carries the scalar covariates
/// (no intercept column; the cut points act as intercepts). The dataset is
/// immutable after load: samplers read it, never mutate it.
struct OrdinalFunctionalDataset {
  IntMatrix outcomes;           // N x T
  Matrix covariates;            // N x P
  Vector time_grid;             // length T, strictly increasing
  int n_levels = 0;             // L >= 2
  std::vector<std::string> warnings;

  Eigen::Index n_subjects() const { return outcomes.rows(); }
  Eigen::Index n_timepoints() const { return outcomes.cols(); }
  Eigen::Index n_covariates() const { return covariates.cols(); }

  /// Throws std::invalid_argument on any violated invariant.
  void validate() const;
};

/// Sampler configuration. basis_size is K for splines and the number of
/// decomposition levels J for the wavelet model.
struct ModelConfig {
  BasisKind basis = BasisKind::ospline;
  int basis_size = 2;
  int n_fpc = 2;                 // K_p, spline samplers only
  int n_samples = 1000;          // total MCMC iterations
  int n_burn = 500;
  std::uint64_t seed = 1;
  double eta = 0.01;             // B-spline composite penalty weight
  int vanishing_moments = 8;     // wavelet only
  Padding padding = Padding::symmetric_halfpoint;

  void validate() const {
    if (basis_size < 1) throw std::invalid_argument("basis_size must be >= 1");
    if (n_burn >= n_samples) throw std::invalid_argument("n_burn must be < n_samples");
    if (n_burn < 0) throw std::invalid_argument("n_burn must be >= 0");
    if (eta <= 0.0 || eta >= 1.0) throw std::invalid_argument("eta must lie in (0, 1)");
    if (n_fpc < 1) throw std::invalid_argument("n_fpc must be >= 1");
  }

  int n_kept() const { return n_samples - n_burn; }
};

/// Retained posterior draws on the data scale.
///
/// beta row m holds the coefficient curves of draw m, flattened p-major:
/// column p * T + t is beta_p(t_t). Cut vectors are stored with the fixed
/// first cut (always 0) included, strictly increasing.
struct PosteriorDraws {
  Matrix beta;                  // n_kept x (P*T)
  Matrix cuts;                  // n_kept x (L-1)
  Eigen::Index n_covariates = 0;
  Eigen::Index n_timepoints = 0;
  int n_levels = 0;
  ModelConfig meta;

  Eigen::Index n_draws() const { return beta.rows(); }

  /// Draws of a single coefficient curve, n_kept x T.
  Matrix covariate_draws(Eigen::Index p) const {
    return beta.middleCols(p * n_timepoints, n_timepoints);
  }

  void validate() const;
};

}  // namespace opfrm
