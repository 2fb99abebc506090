#include "qmch/criteria.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qmch/errors.hpp"

namespace qmch {

namespace {

// Monomial coefficients of B_2, B_4, B_6, B_8, lowest degree first.
constexpr double kB2[] = {1.0 / 6.0, -1.0, 1.0};
constexpr double kB4[] = {-1.0 / 30.0, 0.0, 1.0, -2.0, 1.0};
constexpr double kB6[] = {1.0 / 42.0, 0.0, -0.5, 0.0, 2.5, -3.0, 1.0};
constexpr double kB8[] = {-1.0 / 30.0, 0.0, 2.0 / 3.0, 0.0, -7.0 / 3.0, 0.0, 14.0 / 3.0, -4.0, 1.0};

double horner(const double* coeffs, int degree, double x) {
  double acc = coeffs[degree];
  for (int i = degree - 1; i >= 0; --i) acc = acc * x + coeffs[i];
  return acc;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double bernoulli_even(int alpha, double x) {
  switch (alpha) {
    case 1:
      return horner(kB2, 2, x);
    case 2:
      return horner(kB4, 4, x);
    case 3:
      return horner(kB6, 6, x);
    case 4:
      return horner(kB8, 8, x);
    default:
      throw ConfigError("Bernoulli closed forms cover alpha in {1,2,3,4}");
  }
}

double korobov_kernel(int alpha, double x) {
  const double sign = (alpha % 2 == 0) ? -1.0 : 1.0;
  const double scale =
      sign * std::pow(2.0 * std::numbers::pi, 2.0 * alpha) / factorial(2 * alpha);
  return scale * bernoulli_even(alpha, x - std::floor(x));
}

double clamp_criterion_square(double value) {
  if (value >= 0.0) return value;
  if (value > -1e-9) return 0.0;
  throw std::logic_error("criterion evaluated to a significantly negative square");
}

CriterionValue r_criterion(const Rank1Lattice& lattice, const ProductWeights& w) {
  lattice.validate();
  const int alpha = w.integer_alpha();
  const std::uint64_t N = lattice.modulus;
  const std::size_t d = lattice.dim();

  // Kernel values depend only on the residue n z_j mod N.
  std::vector<double> kernel(N);
  for (std::uint64_t r = 0; r < N; ++r) {
    kernel[r] = korobov_kernel(alpha, static_cast<double>(r) / static_cast<double>(N));
  }

  CompensatedSum acc;
  for (std::uint64_t n = 0; n < N; ++n) {
    double prod = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
      const double g = w.gamma(j + 1);
      prod *= 1.0 + g * g * kernel[(n * lattice.z[j]) % N];
    }
    acc.add(prod - 1.0);
  }
  const double square = clamp_criterion_square(acc.value() / static_cast<double>(N));

  CriterionValue out;
  out.kind = CriterionKind::kR;
  out.value = std::sqrt(square);
  out.points = N;
  out.dimension = d;
  out.alpha = w.alpha();
  out.gamma_spec = w.gamma_rule().spec();
  return out;
}

CriterionValue s_criterion(const Rank1Lattice& lattice, const ProductWeights& w) {
  lattice.validate();
  const int alpha = w.integer_alpha();
  const std::uint64_t N = lattice.modulus;
  const std::size_t d = lattice.dim();

  std::vector<double> kernel(N);
  for (std::uint64_t r = 0; r < N; ++r) {
    kernel[r] = korobov_kernel(alpha, static_cast<double>(r) / static_cast<double>(N));
  }

  CompensatedSum acc;
  for (std::uint64_t n = 0; n < N; ++n) {
    double prod = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
      const double g = w.gamma(j + 1);
      const double f = 1.0 + g * g * kernel[(n * lattice.z[j]) % N];
      prod *= f * f;
    }
    acc.add(prod);
  }
  double offset = 1.0;
  const double z4a = zeta(4.0 * alpha);
  for (std::size_t j = 0; j < d; ++j) {
    const double g = w.gamma(j + 1);
    offset *= 1.0 + 2.0 * z4a * g * g * g * g;
  }
  const double square = clamp_criterion_square(acc.value() / static_cast<double>(N) - offset);

  CriterionValue out;
  out.kind = CriterionKind::kS;
  out.value = std::sqrt(square);
  out.points = N;
  out.dimension = d;
  out.alpha = w.alpha();
  out.gamma_spec = w.gamma_rule().spec();
  return out;
}

}  // namespace qmch
