#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qmch/index_set.hpp"
#include "qmch/points.hpp"
#include "qmch/rank1.hpp"

namespace qmch {

struct PolyLattice;

struct EtaEstimate {
  double eta = 0.0;
  std::size_t gram_dim = 0;
  bool converged = true;
  std::size_t iterations = 0;
  bool dense_fallback = false;
};

/// Dense Hermitian matrix in row-major order.
struct HermitianMatrix {
  std::size_t n = 0;
  std::vector<std::complex<double>> a;

  std::complex<double>& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const std::complex<double>& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Spectral norm via power iteration on B^2 (deflation-free Rayleigh
/// estimate |Bv|/|v|), tolerance 1e-10, at most 10^4 iterations; dense
/// eigendecomposition fallback below dimension 512 when it stalls.
EtaEstimate spectral_norm(const HermitianMatrix& b);

/// Gram deviation G - Id with G_{h,h'} = (1/N) sum_n q_{h'}(x_n) conj(q_h(x_n)),
/// assembled literally from the point set.
HermitianMatrix gram_deviation(const RationalPointSet& points, const IndexSet& set,
                               std::uint32_t base = 2);

/// Assumption-1 defect: spectral norm of the Gram deviation. Requires
/// |I| <= 5000.
EtaEstimate estimate_eta(const RationalPointSet& points, const IndexSet& set,
                         std::uint32_t base = 2);

/// Lattice fast path: Gram entries are exactly 0/1 by the character property.
EtaEstimate estimate_eta(const Rank1Lattice& lattice, const IndexSet& set);
EtaEstimate estimate_eta(const PolyLattice& lattice, const IndexSet& set);

}  // namespace qmch
