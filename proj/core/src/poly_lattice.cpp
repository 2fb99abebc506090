#include "qmch/poly_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qmch/decay.hpp"
#include "qmch/errors.hpp"

namespace qmch {

PolyLattice::PolyLattice(std::uint32_t b, std::size_t m_, FieldPoly p, std::vector<FieldPoly> q)
    : base(b), m(m_), modulus(std::move(p)), gen(std::move(q)) {
  if (m == 0) throw ConfigError("polynomial lattice needs m >= 1");
  if (modulus.degree() != static_cast<int>(m))
    throw ConfigError("modulus degree must equal m");
  for (const auto& qj : gen) {
    if (qj.base() != base || modulus.base() != base) throw ConfigError("field base mismatch");
    if (qj.degree() >= static_cast<int>(m))
      throw ConfigError("generator components must have degree < m");
  }
}

std::uint64_t PolyLattice::point_count() const {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < m; ++i) n *= base;
  return n;
}

RationalPointSet generate_poly_points(const PolyLattice& lattice) {
  const std::uint64_t bm = lattice.point_count();
  RationalPointSet points(bm, lattice.dim());
  std::vector<std::uint64_t> row(lattice.dim());
  for (std::uint64_t h = 0; h < bm; ++h) {
    const FieldPoly hp = FieldPoly::from_integer(h, lattice.base);
    for (std::size_t j = 0; j < lattice.dim(); ++j) {
      const DigitRational v =
          nu_m({hp * lattice.gen[j], lattice.modulus}, lattice.m);
      row[j] = v.num;
    }
    points.append(row);
  }
  return points;
}

std::uint32_t wal_exponent(std::uint64_t h, std::uint64_t xnum, std::size_t m,
                           std::uint32_t base) {
  // digit x_i is the base-b digit of xnum at place m-i; h_k the k-th digit of h
  std::uint32_t e = 0;
  std::vector<std::uint32_t> xdigits(m);
  for (std::size_t i = m; i-- > 0;) {
    xdigits[i] = static_cast<std::uint32_t>(xnum % base);
    xnum /= base;
  }
  // xdigits[k] now holds x_{k+1}
  for (std::size_t k = 0; k < m && h != 0; ++k) {
    const std::uint32_t hk = static_cast<std::uint32_t>(h % base);
    h /= base;
    e = (e + hk * xdigits[k]) % base;
  }
  return e;
}

std::complex<double> wal(std::uint64_t h, std::uint64_t xnum, std::size_t m,
                         std::uint32_t base) {
  const auto e = wal_exponent(h, xnum, m, base);
  if (base == 2) return {e == 0 ? 1.0 : -1.0, 0.0};
  const double t = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(base);
  return {std::cos(t), std::sin(t)};
}

std::complex<double> wal_real(std::uint64_t h, double x, std::size_t depth,
                              std::uint32_t base) {
  if (x < 0.0 || x >= 1.0) throw ConfigError("walsh argument outside [0,1)");
  std::uint32_t e = 0;
  double frac = x;
  for (std::size_t k = 0; k < depth && h != 0; ++k) {
    frac *= base;
    const auto digit = static_cast<std::uint32_t>(frac);
    frac -= digit;
    const std::uint32_t hk = static_cast<std::uint32_t>(h % base);
    h /= base;
    e = (e + hk * digit) % base;
  }
  if (base == 2) return {e == 0 ? 1.0 : -1.0, 0.0};
  const double t = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(base);
  return {std::cos(t), std::sin(t)};
}

double phi_alpha_by_leading(std::uint32_t c0, double alpha, std::uint32_t base) {
  if (!(alpha > 0.5)) throw ConfigError("phi_alpha needs alpha > 1/2");
  const double b = static_cast<double>(base);
  const double head = (b - 1.0) / (std::pow(b, 2.0 * alpha) - b);
  if (c0 == 0) return head;  // x = 0
  // Validated against the truncated Walsh series: the subtracted term decays
  // like b^((1-2 alpha) c0), one b^c0 factor away from a plain b^(-2 alpha c0).
  const double tail = std::pow(b, (1.0 - 2.0 * alpha) * static_cast<double>(c0)) *
                      (std::pow(b, 2.0 * alpha) - 1.0) / (std::pow(b, 2.0 * alpha) - b);
  return head - tail;
}

double phi_alpha(std::uint64_t xnum, std::size_t m, double alpha, std::uint32_t base) {
  std::uint32_t c0 = 0;
  if (xnum != 0) {
    // first nonzero digit position: m minus the mu1 length of the numerator
    c0 = static_cast<std::uint32_t>(m) + 1 - mu1(xnum, base);
  }
  return phi_alpha_by_leading(c0, alpha, base);
}

namespace {

FieldPoly residue_poly(const FrequencyVector& h, const PolyLattice& lattice) {
  if (h.dim() != lattice.dim()) throw ConfigError("frequency/lattice dimension mismatch");
  h.validate();
  FieldPoly acc = FieldPoly::zero(lattice.base);
  for (std::size_t j = 0; j < h.dim(); ++j) {
    const FieldPoly tr = tr_m(static_cast<std::uint64_t>(h.comps[j]), lattice.m, lattice.base);
    acc = acc + poly_mul_mod(tr, lattice.gen[j], lattice.modulus);
  }
  return FieldPoly::divmod(acc, lattice.modulus).second;
}

}  // namespace

bool is_dual_poly(const FrequencyVector& h, const PolyLattice& lattice) {
  return residue_poly(h, lattice).is_zero();
}

std::vector<std::uint64_t> dual_poly_residues(const PolyLattice& lattice, const IndexSet& set) {
  std::vector<std::uint64_t> out;
  out.reserve(set.size());
  for (const auto& h : set.members) out.push_back(residue_poly(h, lattice).to_integer());
  return out;
}

std::complex<double> walsh_char_sum(const FrequencyVector& h, const PolyLattice& lattice) {
  const RationalPointSet points = generate_poly_points(lattice);
  CompensatedSum re, im;
  for (std::size_t n = 0; n < points.size(); ++n) {
    std::uint32_t e = 0;
    for (std::size_t j = 0; j < lattice.dim(); ++j) {
      e = (e + wal_exponent(static_cast<std::uint64_t>(h.comps[j]), points.numerator(n, j),
                            lattice.m, lattice.base)) %
          lattice.base;
    }
    const double t =
        2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(lattice.base);
    re.add(std::cos(t));
    im.add(std::sin(t));
  }
  const double inv = 1.0 / static_cast<double>(points.size());
  return {re.value() * inv, im.value() * inv};
}

namespace {

// phi value per point from deg(h q mod p): the Laurent expansion of t/p has
// its first nonzero digit at position m - deg(t).
double phi_from_remainder(const FieldPoly& t, std::size_t m, double alpha, std::uint32_t base) {
  if (t.is_zero()) return phi_alpha_by_leading(0, alpha, base);
  const auto c0 = static_cast<std::uint32_t>(m) - static_cast<std::uint32_t>(t.degree());
  return phi_alpha_by_leading(c0, alpha, base);
}

}  // namespace

CriterionValue rbreve_criterion(const PolyLattice& lattice, const ProductWeights& w) {
  const std::uint64_t bm = lattice.point_count();
  CompensatedSum acc;
  for (std::uint64_t h = 0; h < bm; ++h) {
    const FieldPoly hp = FieldPoly::from_integer(h, lattice.base);
    double prod = 1.0;
    for (std::size_t j = 0; j < lattice.dim(); ++j) {
      const double g = w.gamma(j + 1);
      const FieldPoly t = poly_mul_mod(hp, lattice.gen[j], lattice.modulus);
      prod *= 1.0 + g * g * phi_from_remainder(t, lattice.m, w.alpha(), lattice.base);
    }
    acc.add(prod - 1.0);
  }
  const double square = clamp_criterion_square(acc.value() / static_cast<double>(bm));

  CriterionValue out;
  out.kind = CriterionKind::kRBreve;
  out.value = std::sqrt(square);
  out.points = bm;
  out.dimension = lattice.dim();
  out.alpha = w.alpha();
  out.gamma_spec = w.gamma_rule().spec();
  return out;
}

PolyLattice cbc_poly(std::size_t m, std::size_t dimension, const ProductWeights& w,
                     std::uint32_t base, std::optional<FieldPoly> modulus) {
  if (dimension == 0) throw ConfigError("dimension must be positive");
  FieldPoly p = modulus ? *modulus : smallest_irreducible(base, m);
  if (p.degree() != static_cast<int>(m)) throw ConfigError("modulus degree must equal m");
  if (modulus && !is_irreducible(p)) throw ConfigError("CBC modulus must be irreducible");

  std::uint64_t bm = 1;
  for (std::size_t i = 0; i < m; ++i) bm *= base;

  std::vector<FieldPoly> gen;
  gen.push_back(FieldPoly::one(base));

  // Partial products per point index h over the fixed coordinates.
  std::vector<double> partial(bm);
  {
    const double g = w.gamma(1);
    for (std::uint64_t h = 0; h < bm; ++h) {
      const FieldPoly t =
          FieldPoly::divmod(FieldPoly::from_integer(h, base), p).second;
      partial[h] = 1.0 + g * g * phi_from_remainder(t, m, w.alpha(), base);
    }
  }

  // Candidate order: lowest-first lexicographic coefficient sequences.
  std::vector<std::uint64_t> candidates(bm);
  for (std::uint64_t c = 0; c < bm; ++c) candidates[c] = c;
  std::sort(candidates.begin(), candidates.end(), [&](std::uint64_t a, std::uint64_t b) {
    for (std::size_t i = 0; i < m; ++i) {
      const auto da = a % base, db = b % base;
      if (da != db) return da < db;
      a /= base;
      b /= base;
    }
    return false;
  });

  for (std::size_t s = 2; s <= dimension; ++s) {
    const double g = w.gamma(s);
    bool have_best = false;
    std::uint64_t best = 0;
    double best_value = 0.0;
    std::vector<double> best_phi, cand_phi(bm);
    for (std::uint64_t cand : candidates) {
      const FieldPoly q = FieldPoly::from_integer(cand, base);
      CompensatedSum acc;
      for (std::uint64_t h = 0; h < bm; ++h) {
        const FieldPoly t = poly_mul_mod(FieldPoly::from_integer(h, base), q, p);
        cand_phi[h] = phi_from_remainder(t, m, w.alpha(), base);
        acc.add(partial[h] * (1.0 + g * g * cand_phi[h]));
      }
      const double value = acc.value();
      if (!have_best || value < best_value) {
        have_best = true;
        best = cand;
        best_value = value;
        best_phi = cand_phi;
      }
    }
    gen.push_back(FieldPoly::from_integer(best, base));
    for (std::uint64_t h = 0; h < bm; ++h) partial[h] *= 1.0 + g * g * best_phi[h];
  }
  return PolyLattice(base, m, std::move(p), std::move(gen));
}

}  // namespace qmch
