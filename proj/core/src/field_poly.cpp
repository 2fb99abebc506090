#include "qmch/field_poly.hpp"

#include <algorithm>
#include <sstream>

namespace qmch {

namespace {

void check_base(std::uint32_t base) {
  if (base != 2 && base != 3 && base != 5)
    throw ConfigError("field base must be one of {2,3,5}");
}

std::uint8_t inv_mod(std::uint32_t a, std::uint32_t b) {
  for (std::uint32_t x = 1; x < b; ++x) {
    if ((a * x) % b == 1) return static_cast<std::uint8_t>(x);
  }
  throw ConfigError("no inverse: zero element");
}

}  // namespace

FieldPoly::FieldPoly(std::uint32_t base, std::vector<std::uint8_t> coeffs)
    : base_(base), coeffs_(std::move(coeffs)) {
  check_base(base);
  for (auto c : coeffs_) {
    if (c >= base_) throw ConfigError("coefficient outside the field");
  }
  normalize();
}

void FieldPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FieldPoly FieldPoly::from_integer(std::uint64_t h, std::uint32_t base) {
  std::vector<std::uint8_t> coeffs;
  while (h != 0) {
    coeffs.push_back(static_cast<std::uint8_t>(h % base));
    h /= base;
  }
  return FieldPoly(base, std::move(coeffs));
}

std::uint64_t FieldPoly::to_integer() const {
  std::uint64_t v = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * base_ + coeffs_[i];
  return v;
}

std::string FieldPoly::print() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << static_cast<int>(coeffs_[i]);
  }
  return os.str();
}

FieldPoly FieldPoly::parse(std::uint32_t base, const std::string& text) {
  std::vector<std::uint8_t> coeffs;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const int v = std::stoi(tok);
    if (v < 0 || static_cast<std::uint32_t>(v) >= base)
      throw ConfigError("polynomial coefficient outside the field: " + tok);
    coeffs.push_back(static_cast<std::uint8_t>(v));
  }
  return FieldPoly(base, std::move(coeffs));
}

FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
  if (a.base_ != b.base_) throw ConfigError("field base mismatch");
  std::vector<std::uint8_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = static_cast<std::uint8_t>((a.coeff(i) + b.coeff(i)) % a.base_);
  }
  return FieldPoly(a.base_, std::move(c));
}

FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) {
  if (a.base_ != b.base_) throw ConfigError("field base mismatch");
  std::vector<std::uint8_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = static_cast<std::uint8_t>((a.coeff(i) + a.base_ - b.coeff(i)) % a.base_);
  }
  return FieldPoly(a.base_, std::move(c));
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
  if (a.base_ != b.base_) throw ConfigError("field base mismatch");
  if (a.is_zero() || b.is_zero()) return FieldPoly::zero(a.base_);
  std::vector<std::uint8_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = static_cast<std::uint8_t>((c[i + j] + a.coeffs_[i] * b.coeffs_[j]) % a.base_);
    }
  }
  return FieldPoly(a.base_, std::move(c));
}

std::pair<FieldPoly, FieldPoly> FieldPoly::divmod(const FieldPoly& num, const FieldPoly& den) {
  if (num.base_ != den.base_) throw ConfigError("field base mismatch");
  if (den.is_zero()) throw ConfigError("division by the zero polynomial");
  const std::uint32_t b = num.base_;
  const int dn = num.degree(), dd = den.degree();
  if (dn < dd) return {FieldPoly::zero(b), num};

  std::vector<std::uint8_t> r = num.coeffs_;
  std::vector<std::uint8_t> q(static_cast<std::size_t>(dn - dd) + 1, 0);
  const std::uint32_t lead_inv = inv_mod(den.coeffs_.back(), b);
  for (int i = dn; i >= dd; --i) {
    const std::uint32_t factor = (r[static_cast<std::size_t>(i)] * lead_inv) % b;
    if (factor == 0) continue;
    const int shift = i - dd;
    q[static_cast<std::size_t>(shift)] = static_cast<std::uint8_t>(factor);
    for (int k = 0; k <= dd; ++k) {
      auto& cell = r[static_cast<std::size_t>(shift + k)];
      cell = static_cast<std::uint8_t>(
          (cell + b * b - factor * den.coeffs_[static_cast<std::size_t>(k)]) % b);
    }
  }
  return {FieldPoly(b, std::move(q)), FieldPoly(b, std::move(r))};
}

FieldPoly poly_mul_mod(const FieldPoly& a, const FieldPoly& c, const FieldPoly& modulus) {
  return FieldPoly::divmod(a * c, modulus).second;
}

bool is_irreducible(const FieldPoly& p) {
  if (p.degree() < 1) throw ConfigError("irreducibility is defined for degree >= 1");
  const std::uint32_t b = p.base();
  const int half = p.degree() / 2;
  for (int d = 1; d <= half; ++d) {
    // all monic polynomials of degree d
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= b;
    for (std::uint64_t low = 0; low < count; ++low) {
      FieldPoly candidate = FieldPoly::from_integer(low + count, b);  // leading digit 1
      if (FieldPoly::divmod(p, candidate).second.is_zero()) return false;
    }
  }
  return true;
}

FieldPoly fibonacci_poly(std::size_t n, std::uint32_t base) {
  check_base(base);
  if (n == 0) throw ConfigError("fibonacci polynomials are indexed from 1");
  FieldPoly prev = FieldPoly::one(base);   // F_1
  if (n == 1) return prev;
  FieldPoly curr = FieldPoly::x(base);     // F_2
  const FieldPoly x = FieldPoly::x(base);
  for (std::size_t k = 3; k <= n; ++k) {
    FieldPoly next = x * curr + prev;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

FieldPoly smallest_irreducible(std::uint32_t base, std::size_t degree) {
  check_base(base);
  if (degree == 0) throw ConfigError("need degree >= 1");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < degree; ++i) count *= base;
  // Lowest-first lexicographic order on (eta_0,...,eta_{m-1}) is the integer
  // order of the digit-reversed low part.
  std::vector<std::uint64_t> lows(count);
  for (std::uint64_t i = 0; i < count; ++i) lows[i] = i;
  std::sort(lows.begin(), lows.end(), [&](std::uint64_t a, std::uint64_t b) {
    for (std::size_t i = 0; i < degree; ++i) {
      const auto da = a % base, db = b % base;
      if (da != db) return da < db;
      a /= base;
      b /= base;
    }
    return false;
  });
  for (std::uint64_t low : lows) {
    FieldPoly candidate = FieldPoly::from_integer(low + count, base);
    if (is_irreducible(candidate)) return candidate;
  }
  throw ConfigError("no irreducible polynomial found");  // unreachable for degree >= 1
}

FieldPoly tr_m(std::uint64_t h, std::size_t m, std::uint32_t base) {
  check_base(base);
  std::vector<std::uint8_t> coeffs;
  coeffs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    coeffs.push_back(static_cast<std::uint8_t>(h % base));
    h /= base;
  }
  return FieldPoly(base, std::move(coeffs));
}

DigitRational nu_m(const LaurentFraction& frac, std::size_t m) {
  const FieldPoly& den = frac.denominator;
  if (den.is_zero()) throw ConfigError("nu_m needs a nonzero denominator");
  const std::uint32_t b = frac.numerator.base();
  if (b != den.base()) throw ConfigError("field base mismatch");

  // Only the fractional part of num/den contributes negative powers.
  const FieldPoly t = FieldPoly::divmod(frac.numerator, den).second;
  const int dd = den.degree();

  // In y = 1/x: t/den = y * T(y)/P(y) with T(y) = y^(dd-1) t(1/y) and
  // P(y) = y^dd den(1/y), P(0) = lead(den) != 0. Digit a_i = [y^(i-1)] T/P.
  std::vector<std::uint8_t> T(static_cast<std::size_t>(dd), 0);
  for (int i = 0; i <= t.degree(); ++i) T[static_cast<std::size_t>(dd - 1 - i)] = t.coeff(i);
  std::vector<std::uint8_t> P(static_cast<std::size_t>(dd) + 1, 0);
  for (int i = 0; i <= dd; ++i) P[static_cast<std::size_t>(dd - i)] = den.coeff(i);
  const std::uint8_t p0_inv = inv_mod(P[0], b);

  DigitRational out;
  out.den = 1;
  std::vector<std::uint8_t> series(m, 0);
  for (std::size_t k = 0; k < m; ++k) {
    std::uint32_t acc = k < T.size() ? T[k] : 0;
    for (std::size_t j = 1; j <= k && j < P.size(); ++j) {
      acc = (acc + (b - P[j] % b) * series[k - j]) % b;
    }
    series[k] = static_cast<std::uint8_t>((acc * p0_inv) % b);
  }
  for (std::size_t i = 0; i < m; ++i) {
    out.num = out.num * b + series[i];
    out.den *= b;
  }
  return out;
}

}  // namespace qmch
