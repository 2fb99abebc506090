#include "qmch/lasso.hpp"

#include <cmath>
#include <numbers>

#include "qmch/gram.hpp"
#include "qmch/noise.hpp"
#include "qmch/poly_lattice.hpp"

namespace qmch {

double soft_threshold(double a, double k) {
  if (k < 0.0) throw ConfigError("threshold must be non-negative");
  return std::max(0.0, a - k) + std::min(0.0, a + k);
}

std::complex<double> soft_threshold(std::complex<double> a, double k) {
  if (k < 0.0) throw ConfigError("threshold must be non-negative");
  const double mag = std::abs(a);
  if (mag <= k || mag == 0.0) return {0.0, 0.0};
  return a * ((mag - k) / mag);
}

Approximant lasso_qmc_hyperinterp(const SampleSet& samples, const IndexSet& set,
                                  const LassoConfig& config, std::uint32_t base) {
  if (config.lambda < 0.0) throw ConfigError("lambda must be non-negative");
  Approximant a = qmc_hyperinterp(samples, set, base);
  for (auto& c : a.coeffs) c = soft_threshold(c, config.lambda);
  a.provenance = Approximant::Provenance::kLasso;
  a.lambda = config.lambda;
  return a;
}

namespace {

// Basis matrix column h evaluated at all sample points.
std::vector<std::complex<double>> basis_column(const SampleSet& samples,
                                               const FrequencyVector& h, std::uint32_t base) {
  const auto& pts = samples.points;
  const std::size_t N = samples.size();
  std::vector<std::complex<double>> col(N);
  if (h.kind == BasisKind::kTrig) {
    const std::int64_t D = static_cast<std::int64_t>(pts.denominator());
    for (std::size_t n = 0; n < N; ++n) {
      std::int64_t phase = 0;
      for (std::size_t j = 0; j < h.dim(); ++j) {
        const std::int64_t r = ((h.comps[j] % D) + D) % D;
        phase = (phase + r * static_cast<std::int64_t>(pts.numerator(n, j))) % D;
      }
      col[n] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(phase) /
                                   static_cast<double>(D));
    }
  } else {
    std::size_t m = 0;
    for (std::uint64_t t = pts.denominator(); t > 1; t /= base) ++m;
    for (std::size_t n = 0; n < N; ++n) {
      std::complex<double> q = 1.0;
      for (std::size_t j = 0; j < h.dim(); ++j) {
        q *= wal(static_cast<std::uint64_t>(h.comps[j]), pts.numerator(n, j), m, base);
      }
      col[n] = q;
    }
  }
  return col;
}

double objective(const std::vector<std::vector<std::complex<double>>>& columns,
                 const std::vector<double>& y,
                 const std::vector<std::complex<double>>& beta, double lambda) {
  const std::size_t N = y.size();
  CompensatedSum rss;
  for (std::size_t n = 0; n < N; ++n) {
    std::complex<double> fit = 0.0;
    for (std::size_t k = 0; k < beta.size(); ++k) fit += columns[k][n] * beta[k];
    rss.add(std::norm(y[n] - fit));
  }
  double l1 = 0.0;
  for (const auto& b : beta) l1 += std::abs(b);
  return rss.value() / (2.0 * static_cast<double>(N)) + lambda * l1;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double uniform01(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 1.0) / 9007199254740992.0;
}

}  // namespace

LassoOptimalityReport verify_lasso_optimality(const SampleSet& samples, const IndexSet& set,
                                              double lambda, std::uint64_t seed,
                                              std::uint32_t base) {
  LassoOptimalityReport report;
  {
    const auto eta = estimate_eta(samples.points, set, base);
    report.gram_deviation = eta.eta;
    if (eta.eta > 1e-10)
      throw ConfigError("points do not satisfy the exactness needed for the closed form");
  }
  const std::size_t N = samples.size();
  const std::size_t K = set.size();

  std::vector<std::vector<std::complex<double>>> columns;
  columns.reserve(K);
  for (const auto& h : set.members) columns.push_back(basis_column(samples, h, base));

  // closed form: soft-threshold of X* y / N
  std::vector<std::complex<double>> closed(K);
  for (std::size_t k = 0; k < K; ++k) {
    std::complex<double> inner = 0.0;
    for (std::size_t n = 0; n < N; ++n) inner += std::conj(columns[k][n]) * samples.values[n];
    closed[k] = soft_threshold(inner / static_cast<double>(N), lambda);
  }
  report.objective = objective(columns, samples.values, closed, lambda);

  // cyclic coordinate descent to stationarity
  std::vector<std::complex<double>> beta(K, 0.0);
  std::vector<std::complex<double>> residual(samples.values.begin(), samples.values.end());
  constexpr std::size_t kMaxSweeps = 1000;
  for (std::size_t sweep = 1; sweep <= kMaxSweeps; ++sweep) {
    report.descent_sweeps = sweep;
    for (std::size_t k = 0; k < K; ++k) {
      std::complex<double> corr = 0.0;
      for (std::size_t n = 0; n < N; ++n) corr += std::conj(columns[k][n]) * residual[n];
      const std::complex<double> target = beta[k] + corr / static_cast<double>(N);
      const std::complex<double> updated = soft_threshold(target, lambda);
      const std::complex<double> delta = updated - beta[k];
      if (std::abs(delta) != 0.0) {
        for (std::size_t n = 0; n < N; ++n) residual[n] -= columns[k][n] * delta;
        beta[k] = updated;
      }
    }
    // KKT stationarity: inside the support |a_k - b_k| = lambda, else |a_k| <= lambda
    double violation = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      std::complex<double> corr = 0.0;
      for (std::size_t n = 0; n < N; ++n) corr += std::conj(columns[k][n]) * residual[n];
      const std::complex<double> grad = corr / static_cast<double>(N);
      if (std::abs(beta[k]) > 0.0) {
        violation = std::max(violation,
                             std::abs(grad - lambda * beta[k] / std::abs(beta[k])));
      } else {
        violation = std::max(violation, std::max(0.0, std::abs(grad) - lambda));
      }
    }
    if (violation <= 1e-12) break;
  }
  for (std::size_t k = 0; k < K; ++k) {
    report.closed_vs_descent = std::max(report.closed_vs_descent, std::abs(closed[k] - beta[k]));
  }

  // seeded random perturbations with |delta|_2 <= 0.1
  constexpr std::size_t kPerturbations = 1000;
  report.perturbations = kPerturbations;
  std::vector<std::complex<double>> perturbed(K);
  for (std::size_t trial = 0; trial < kPerturbations; ++trial) {
    double norm_sq = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      const double re = gaussian_draw(seed, 4 * (trial * K + k));
      const double im = gaussian_draw(seed, 4 * (trial * K + k) + 1);
      perturbed[k] = {re, im};
      norm_sq += re * re + im * im;
    }
    const double radius = 0.1 * uniform01(mix(seed ^ (0xABCDull + trial)));
    const double scale = radius / std::max(1e-300, std::sqrt(norm_sq));
    for (std::size_t k = 0; k < K; ++k) perturbed[k] = closed[k] + perturbed[k] * scale;
    if (objective(columns, samples.values, perturbed, lambda) >= report.objective - 1e-12) {
      ++report.perturbation_wins;
    }
  }

  report.certified = report.closed_vs_descent <= 1e-8 &&
                     report.perturbation_wins == report.perturbations;
  return report;
}

NoiseStudyReport noise_expectation_study(const SampleSet& clean, const IndexSet& set,
                                         double sigma, std::size_t trials, std::uint64_t seed,
                                         std::uint32_t base) {
  if (trials < 30) throw ConfigError("noise study needs at least 30 trials");
  const Approximant reference = qmc_hyperinterp(clean, set, base);
  const std::size_t N = clean.size();

  NoiseStudyReport report;
  report.trials = trials;
  report.sigma = sigma;
  report.bound = sigma * std::sqrt(static_cast<double>(set.size()) / static_cast<double>(N));

  CompensatedSum err_sum, sq_sum;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<double> noisy = clean.values;
    for (std::size_t n = 0; n < N; ++n) noisy[n] += sigma * gaussian_draw(seed + t, n);
    const Approximant noisy_approx =
        qmc_hyperinterp(SampleSet(clean.points, std::move(noisy)), set, base);
    double dist_sq = 0.0;
    for (std::size_t k = 0; k < set.size(); ++k) {
      dist_sq += std::norm(noisy_approx.coeffs[k] - reference.coeffs[k]);
    }
    err_sum.add(std::sqrt(dist_sq));
    sq_sum.add(dist_sq);
  }
  report.mean_error = err_sum.value() / static_cast<double>(trials);
  report.mean_square = sq_sum.value() / static_cast<double>(trials);
  if (report.bound > 0.0) {
    report.mean_ratio = report.mean_error / report.bound;
    report.square_ratio = report.mean_square / (report.bound * report.bound);
  }
  return report;
}

}  // namespace qmch
