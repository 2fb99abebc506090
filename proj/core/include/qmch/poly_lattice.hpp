#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "qmch/criteria.hpp"
#include "qmch/field_poly.hpp"
#include "qmch/frequency.hpp"
#include "qmch/index_set.hpp"
#include "qmch/points.hpp"
#include "qmch/weights.hpp"

namespace qmch {

/// Rank-1 polynomial lattice: b^m points indexed by the digit polynomials
/// h(x), with coordinates nu_m(h(x) q_j(x) / p(x)).
struct PolyLattice {
  std::uint32_t base = 2;
  std::size_t m = 1;
  FieldPoly modulus;
  std::vector<FieldPoly> gen;

  PolyLattice(std::uint32_t b, std::size_t m_, FieldPoly p, std::vector<FieldPoly> q);

  std::size_t dim() const { return gen.size(); }
  std::uint64_t point_count() const;
};

RationalPointSet generate_poly_points(const PolyLattice& lattice);

/// Walsh exponent sum_k h_k x_{k+1} mod b for x = xnum / b^m.
std::uint32_t wal_exponent(std::uint64_t h, std::uint64_t xnum, std::size_t m,
                           std::uint32_t base);

/// Unit-modulus Walsh value exp(2 pi i/b * wal_exponent).
std::complex<double> wal(std::uint64_t h, std::uint64_t xnum, std::size_t m,
                         std::uint32_t base);

/// Walsh value at an arbitrary point in [0,1), truncating the digit
/// expansion at `depth` digits.
std::complex<double> wal_real(std::uint64_t h, double x, std::size_t depth,
                              std::uint32_t base);

/// Walsh-space kernel sum_{h >= 1} wal_h(x) / b^(2 alpha mu1(h)), closed form.
/// Depends on x only through the position of its first nonzero digit.
double phi_alpha(std::uint64_t xnum, std::size_t m, double alpha, std::uint32_t base);
double phi_alpha_by_leading(std::uint32_t c0, double alpha, std::uint32_t base);

bool is_dual_poly(const FrequencyVector& h, const PolyLattice& lattice);

/// tr_m(h) . q mod p represented as an integer residue, in member order.
std::vector<std::uint64_t> dual_poly_residues(const PolyLattice& lattice, const IndexSet& set);

/// Literal sum (1/b^m) sum_x wal_h(x); 1 on the dual polynomial lattice,
/// 0 otherwise. Exposed for test oracles.
std::complex<double> walsh_char_sum(const FrequencyVector& h, const PolyLattice& lattice);

/// Walsh-space quality criterion via the phi_alpha closed form.
CriterionValue rbreve_criterion(const PolyLattice& lattice, const ProductWeights& w);

/// Component-by-component search minimizing the Walsh criterion over all
/// generator polynomials of degree < m; ties break to the smallest
/// coefficient sequence (lowest degree first). Picks the lexicographically
/// smallest monic irreducible modulus when none is supplied.
PolyLattice cbc_poly(std::size_t m, std::size_t dimension, const ProductWeights& w,
                     std::uint32_t base = 2, std::optional<FieldPoly> modulus = std::nullopt);

}  // namespace qmch
