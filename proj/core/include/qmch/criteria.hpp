#pragma once

#include <cstdint>
#include <string>

#include "qmch/rank1.hpp"
#include "qmch/weights.hpp"

namespace qmch {

/// Even Bernoulli polynomial B_{2 alpha}(x) for alpha in {1,2,3,4},
/// evaluated from exact rational monomial coefficients.
double bernoulli_even(int alpha, double x);

/// Korobov kernel sum_{h != 0} exp(2 pi i h x)/|h|^(2 alpha)
///   = (2 pi)^(2 alpha) (-1)^(alpha+1) / (2 alpha)! * B_{2 alpha}({x}).
double korobov_kernel(int alpha, double x);

enum class CriterionKind { kR, kS, kRBreve };

struct CriterionValue {
  CriterionKind kind = CriterionKind::kR;
  double value = 0.0;  // the non-negative square root
  std::uint64_t points = 0;
  std::size_t dimension = 0;
  double alpha = 0.0;
  std::string gamma_spec;
};

/// Dual-lattice quality criterion R (Bernoulli closed form; integer alpha).
CriterionValue r_criterion(const Rank1Lattice& lattice, const ProductWeights& w);

/// Index-set-free quality criterion S (Bernoulli closed form; integer alpha).
CriterionValue s_criterion(const Rank1Lattice& lattice, const ProductWeights& w);

/// Small negative values from cancellation are clamped to zero; anything
/// below -1e-9 indicates a broken evaluation and throws.
double clamp_criterion_square(double value);

}  // namespace qmch
