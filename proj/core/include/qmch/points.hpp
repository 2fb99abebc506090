#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "qmch/errors.hpp"

namespace qmch {

/// Point set with exact rational coordinates num/denominator in [0,1).
class RationalPointSet {
 public:
  RationalPointSet(std::uint64_t denominator, std::size_t dimension)
      : denominator_(denominator), dimension_(dimension) {
    if (denominator == 0) throw ConfigError("point denominator must be positive");
  }

  std::uint64_t denominator() const { return denominator_; }
  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return nums_.size() / dimension_; }

  void append(const std::vector<std::uint64_t>& numerators) {
    nums_.insert(nums_.end(), numerators.begin(), numerators.end());
  }

  std::uint64_t numerator(std::size_t n, std::size_t j) const {
    return nums_[n * dimension_ + j];
  }

  double coord(std::size_t n, std::size_t j) const {
    return static_cast<double>(numerator(n, j)) / static_cast<double>(denominator_);
  }

  std::vector<double> point(std::size_t n) const {
    std::vector<double> x(dimension_);
    for (std::size_t j = 0; j < dimension_; ++j) x[j] = coord(n, j);
    return x;
  }

 private:
  std::uint64_t denominator_;
  std::size_t dimension_;
  std::vector<std::uint64_t> nums_;
};

/// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace qmch
