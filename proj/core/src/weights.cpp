#include "qmch/weights.hpp"

#include <cmath>
#include <sstream>

#include "qmch/errors.hpp"

namespace qmch {

GammaRule::GammaRule(Kind kind, double c, double a, std::vector<double> values)
    : kind_(kind), c_(c), a_(a), values_(std::move(values)) {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kConstant:
      os << "const:" << c_;
      break;
    case Kind::kPower:
      os << "pow:" << c_ << ":" << a_;
      break;
    case Kind::kList: {
      os << "list:";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ',';
        os << values_[i];
      }
      break;
    }
  }
  spec_ = os.str();
}

GammaRule GammaRule::constant(double c) {
  if (c < 0.0 || c > 1.0) throw ConfigError("gamma constant must lie in [0,1]");
  return GammaRule(Kind::kConstant, c, 0.0, {});
}

GammaRule GammaRule::power(double c, double a) {
  if (c < 0.0 || c > 1.0) throw ConfigError("gamma power scale must lie in [0,1]");
  if (a < 0.0) throw ConfigError("gamma power exponent must be >= 0");
  return GammaRule(Kind::kPower, c, a, {});
}

GammaRule GammaRule::explicit_list(std::vector<double> values) {
  for (double v : values) {
    if (v < 0.0 || v > 1.0) throw ConfigError("gamma list entries must lie in [0,1]");
  }
  return GammaRule(Kind::kList, 0.0, 0.0, std::move(values));
}

GammaRule GammaRule::parse(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ConfigError("bad gamma spec: " + spec);
  const std::string head = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  try {
    if (head == "const") return constant(std::stod(rest));
    if (head == "pow") {
      auto c2 = rest.find(':');
      if (c2 == std::string::npos) throw ConfigError("bad gamma spec: " + spec);
      return power(std::stod(rest.substr(0, c2)), std::stod(rest.substr(c2 + 1)));
    }
    if (head == "list") {
      std::vector<double> vals;
      std::stringstream ss(rest);
      std::string tok;
      while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
      if (vals.empty()) throw ConfigError("empty gamma list");
      return explicit_list(std::move(vals));
    }
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad gamma spec: " + spec);
  }
  throw ConfigError("unknown gamma rule: " + head);
}

double GammaRule::operator()(std::size_t j) const {
  if (j == 0) throw ConfigError("gamma index is 1-based");
  switch (kind_) {
    case Kind::kConstant:
      return c_;
    case Kind::kPower:
      return c_ * std::pow(static_cast<double>(j), -a_);
    case Kind::kList:
      if (j > values_.size())
        throw ConfigError("gamma list has no entry for coordinate " + std::to_string(j));
      return values_[j - 1];
  }
  return 0.0;
}

ProductWeights::ProductWeights(double alpha, GammaRule gamma)
    : alpha_(alpha), gamma_(std::move(gamma)) {
  if (!(alpha > 0.5)) throw ConfigError("smoothness alpha must exceed 1/2");
}

int ProductWeights::integer_alpha() const {
  const double r = std::round(alpha_);
  if (std::abs(alpha_ - r) > 0.0 || r < 1.0 || r > 4.0)
    throw ConfigError("closed-form criteria require alpha in {1,2,3,4}");
  return static_cast<int>(r);
}

double zeta(double s) {
  if (!(s > 1.0)) throw ConfigError("zeta requires s > 1");
  // Truncated sum with Euler-Maclaurin tail through the B4 term. With T=1e4
  // the first omitted term is below 1e-19 for every s of interest.
  constexpr int kTerms = 10000;
  double sum = 0.0;
  for (int t = kTerms - 1; t >= 1; --t) sum += std::pow(static_cast<double>(t), -s);
  const double T = static_cast<double>(kTerms);
  const double tail = std::pow(T, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(T, -s) +
                      s / 12.0 * std::pow(T, -s - 1.0) -
                      s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(T, -s - 3.0);
  return sum + tail;
}

}  // namespace qmch
