#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

#include "qmch/index_set.hpp"
#include "qmch/points.hpp"

namespace qmch {

/// Sample values over an exact-rational point set.
struct SampleSet {
  RationalPointSet points;
  std::vector<double> values;

  SampleSet(RationalPointSet p, std::vector<double> v)
      : points(std::move(p)), values(std::move(v)) {
    if (points.size() != values.size() || values.empty())
      throw ConfigError("sample set needs one value per point");
  }

  std::size_t size() const { return values.size(); }
};

/// (1/N) sum_n v(x_n) conj(q_h(x_n)) with compensated accumulation.
std::complex<double> discrete_inner(const SampleSet& samples, const FrequencyVector& h,
                                    std::uint32_t base = 2);

struct Approximant {
  enum class Provenance { kQmc, kLasso, kClassical };

  IndexSet index;
  std::vector<std::complex<double>> coeffs;  // aligned with index.members
  Provenance provenance = Provenance::kQmc;
  double lambda = 0.0;  // lasso only

  std::complex<double> coeff_at(const FrequencyVector& h) const;
  double coeff_l2() const;  // sqrt(sum |c_h|^2)
  double coeff_l1() const;
};

/// QMC hyperinterpolation: coefficients are the discrete inner products over
/// the index set. On reconstruction points this is the classical operator.
Approximant qmc_hyperinterp(const SampleSet& samples, const IndexSet& set,
                            std::uint32_t base = 2);

/// Pointwise synthesis sum_h c_h q_h(x). Walsh evaluation truncates the digit
/// expansion of x at `walsh_depth` digits.
std::complex<double> evaluate(const Approximant& a, std::span<const double> x,
                              std::size_t walsh_depth = 48, std::uint32_t base = 2);

/// Real-part evaluation; rejects imaginary residue above 1e-8.
double evaluate_real(const Approximant& a, std::span<const double> x,
                     std::size_t walsh_depth = 48, std::uint32_t base = 2);

/// sqrt( sum_{h in I} |fhat_h - c_h|^2 + f_norm_sq - sum_{h in I} |fhat_h|^2 ),
/// with fhat aligned to the approximant's member order. Rejects Bessel
/// violations beyond 1e-9.
double l2_error_analytic(const Approximant& a, const std::vector<std::complex<double>>& fhat,
                         double f_norm_sq);

struct OperatorBoundReport {
  double approx_l2 = 0.0;   // |Q f|_L2 from the coefficient norm
  double sup_proxy = 0.0;   // max |f| over the probe samples
  double eta = 0.0;
  double bound = 0.0;       // sqrt(1+eta) * sup_proxy
  double margin = 0.0;
  bool holds = false;       // advisory: the sup norm is only sampled
  double best_error_proxy = 0.0;  // max |f - p*| over the probe samples, if p* given
};

/// Advisory check of |Q f|_L2 <= sqrt(1+eta) |f|_inf using a sampled sup
/// norm; optionally reports a best-approximation proxy from exact
/// coefficients over the same index set.
OperatorBoundReport theorem33_bound_check(
    const Approximant& a, double eta, const SampleSet& probe,
    const std::vector<std::complex<double>>* p_star_coeffs = nullptr,
    std::uint32_t base = 2);

/// Text format: header "basis d |I| provenance", then "h-components re im".
void write_approximant(std::ostream& os, const Approximant& a);
Approximant read_approximant(std::istream& is);

}  // namespace qmch
