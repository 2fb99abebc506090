#pragma once

#include <complex>
#include <cstdint>

#include "qmch/hyperinterp.hpp"

namespace qmch {

/// Soft thresholding max(0, a-k) + min(0, a+k).
double soft_threshold(double a, double k);

/// Complex extension: shrink the modulus by k, zero inside the threshold.
/// Coincides with the real rule on the real line.
std::complex<double> soft_threshold(std::complex<double> a, double k);

struct LassoConfig {
  double lambda = 0.0;
};

/// Soft-thresholded QMC hyperinterpolation coefficients.
Approximant lasso_qmc_hyperinterp(const SampleSet& samples, const IndexSet& set,
                                  const LassoConfig& config, std::uint32_t base = 2);

struct LassoOptimalityReport {
  double gram_deviation = 0.0;
  double closed_vs_descent = 0.0;   // max coefficient difference
  std::size_t descent_sweeps = 0;
  std::size_t perturbations = 0;
  std::size_t perturbation_wins = 0;  // closed form no worse than the perturbed point
  double objective = 0.0;
  bool certified = false;
};

/// Certifies the closed-form Lasso solution on exactness points two ways:
/// the objective beats seeded random perturbations of radius 0.1, and the
/// coefficients agree with a cyclic coordinate-descent solve. The certified
/// objective is |y - X b|^2/(2N) + lambda |b|_1, whose exact minimizer under
/// X*X = N Id is the soft-thresholded inner-product vector.
LassoOptimalityReport verify_lasso_optimality(const SampleSet& samples, const IndexSet& set,
                                              double lambda, std::uint64_t seed,
                                              std::uint32_t base = 2);

struct NoiseStudyReport {
  std::size_t trials = 0;
  double sigma = 0.0;
  double bound = 0.0;          // sigma sqrt(|I|/N)
  double mean_error = 0.0;     // Monte-Carlo mean of |Q f^eps - Q f|_L2
  double mean_square = 0.0;
  double mean_ratio = 0.0;     // mean_error / bound
  double square_ratio = 0.0;   // mean_square / bound^2
};

/// Seeded Monte-Carlo study of the coefficient-noise propagation; trial t
/// derives its stream from seed + t.
NoiseStudyReport noise_expectation_study(const SampleSet& clean, const IndexSet& set,
                                         double sigma, std::size_t trials, std::uint64_t seed,
                                         std::uint32_t base = 2);

}  // namespace qmch
