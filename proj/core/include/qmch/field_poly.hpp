#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmch/errors.hpp"

namespace qmch {

/// Polynomial over the prime field F_b, b in {2,3,5}. Coefficients are stored
/// lowest degree first with no trailing zeros; the zero polynomial is empty.
class FieldPoly {
 public:
  FieldPoly(std::uint32_t base, std::vector<std::uint8_t> coeffs);

  static FieldPoly zero(std::uint32_t base) { return FieldPoly(base, {}); }
  static FieldPoly one(std::uint32_t base) { return FieldPoly(base, {1}); }
  static FieldPoly x(std::uint32_t base) { return FieldPoly(base, {0, 1}); }

  /// Digit polynomial of h: h = eta_0 + eta_1 b + ... -> eta_0 + eta_1 x + ...
  static FieldPoly from_integer(std::uint64_t h, std::uint32_t base);

  std::uint32_t base() const { return base_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::uint8_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  const std::vector<std::uint8_t>& coeffs() const { return coeffs_; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Integer whose base-b digits are the coefficients.
  std::uint64_t to_integer() const;

  /// Comma-separated coefficient list, lowest degree first ("0" for zero).
  std::string print() const;
  static FieldPoly parse(std::uint32_t base, const std::string& text);

  friend bool operator==(const FieldPoly& a, const FieldPoly& b) {
    return a.base_ == b.base_ && a.coeffs_ == b.coeffs_;
  }

  friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);

  /// Quotient and remainder of schoolbook long division.
  static std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& num, const FieldPoly& den);

 private:
  void normalize();

  std::uint32_t base_;
  std::vector<std::uint8_t> coeffs_;
};

FieldPoly poly_mul_mod(const FieldPoly& a, const FieldPoly& c, const FieldPoly& modulus);

/// Trial division by all monic polynomials of degree <= deg(p)/2.
bool is_irreducible(const FieldPoly& p);

/// F_1 = 1, F_2 = x, F_n = x F_{n-1} + F_{n-2} over F_b.
FieldPoly fibonacci_poly(std::size_t n, std::uint32_t base);

/// Lexicographically smallest monic irreducible of the given degree
/// (coefficient sequences compared lowest degree first).
FieldPoly smallest_irreducible(std::uint32_t base, std::size_t degree);

/// Polynomial of the lowest m base-b digits of h.
FieldPoly tr_m(std::uint64_t h, std::size_t m, std::uint32_t base);

struct LaurentFraction {
  FieldPoly numerator;
  FieldPoly denominator;
};

/// Exact rational with denominator base^m.
struct DigitRational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// nu_m: expands num/den as a Laurent series sum_{i>=w} a_i x^-i and returns
/// sum_{i=max(1,w)}^m a_i b^-i. Exact digit arithmetic throughout.
DigitRational nu_m(const LaurentFraction& frac, std::size_t m);

}  // namespace qmch
