#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qmch/frequency.hpp"

namespace qmch {

/// Named test function with a pointwise evaluator, a coefficient oracle over
/// arbitrary finite index sets, and its exact (or oracle) squared L2 norm.
struct TestFunction {
  std::string name;
  std::size_t dimension = 1;
  double norm_sq = 1.0;
  std::function<double(std::span<const double>)> eval;
  std::function<std::complex<double>(const FrequencyVector&)> coeff;
};

/// Univariate factor of the smooth periodic product test function:
/// c*(4 + sgn(x-1/2)(sin^3(2 pi x) + sin^4(2 pi x))), unit L2 norm.
double kv_factor(double x);

/// Fourier coefficient of kv_factor by piecewise Gauss-Legendre quadrature on
/// [0,1/2] and [1/2,1] (the integrand is analytic on each half), tolerance
/// 1e-12, memoized.
std::complex<double> kv_fourier(std::int64_t h);

TestFunction make_kv(std::size_t dimension);

/// Weighted product variant prod_j (1 + omega_j kv_factor(x_j)) with
/// omega_j = c * j^-a.
TestFunction make_kv_weighted(std::size_t dimension, double omega_c, double omega_a);

/// Piecewise-constant +-1 wave on the depth-4 dyadic grid with exact Walsh
/// coefficients (base 2); coefficients vanish for h >= 16.
TestFunction make_square_wave();
double square_wave(double x);
std::vector<double> square_wave_walsh_coeffs();  // h = 0..15, exact

/// Coefficient cache file: a "# tol=..." header then "name h re im" lines.
struct CoeffCacheEntry {
  std::string name;
  std::int64_t h = 0;
  std::complex<double> value;
};
void write_coeff_cache(std::ostream& os, const std::vector<CoeffCacheEntry>& entries,
                       double tol);
std::vector<CoeffCacheEntry> read_coeff_cache(std::istream& is);

}  // namespace qmch
