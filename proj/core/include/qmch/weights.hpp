#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qmch {

/// Deterministic rule producing coordinate weights gamma_j in [0,1], j >= 1.
/// Supported families: constant c, power law c*j^-a, and explicit lists.
class GammaRule {
 public:
  static GammaRule constant(double c);
  static GammaRule power(double c, double a);
  static GammaRule explicit_list(std::vector<double> values);

  /// Parses "const:c", "pow:c:a" or "list:v1,v2,...".
  static GammaRule parse(const std::string& spec);

  double operator()(std::size_t j) const;  // 1-based coordinate index

  const std::string& spec() const { return spec_; }

 private:
  enum class Kind { kConstant, kPower, kList };

  GammaRule(Kind kind, double c, double a, std::vector<double> values);

  Kind kind_;
  double c_ = 0.0;
  double a_ = 0.0;
  std::vector<double> values_;
  std::string spec_;
};

/// Smoothness alpha > 1/2 plus a product-weight rule.
class ProductWeights {
 public:
  ProductWeights(double alpha, GammaRule gamma);

  double alpha() const { return alpha_; }
  double gamma(std::size_t j) const { return gamma_(j); }
  const GammaRule& gamma_rule() const { return gamma_; }

  /// Integral alpha in {1,2,3,4} is required by the Bernoulli closed forms.
  int integer_alpha() const;

 private:
  double alpha_;
  GammaRule gamma_;
};

/// Riemann zeta for s > 1, relative accuracy better than 1e-12.
double zeta(double s);

}  // namespace qmch
