#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qmch/frequency.hpp"
#include "qmch/index_set.hpp"
#include "qmch/points.hpp"

namespace qmch {

/// Rank-1 lattice: N points {n z / N}, n = 0..N-1.
struct Rank1Lattice {
  std::uint64_t modulus = 2;
  std::vector<std::uint64_t> z;

  std::size_t dim() const { return z.size(); }
  void validate() const;
};

bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);  // smallest prime >= n

RationalPointSet generate_points(const Rank1Lattice& lattice);

/// h . z mod N, reduced term-by-term in exact integer arithmetic.
std::uint64_t dual_residue(const FrequencyVector& h, const Rank1Lattice& lattice);

bool is_dual(const FrequencyVector& h, const Rank1Lattice& lattice);

/// Literal character sum (1/N) sum_n exp(2 pi i h . x_n); 1 on the dual
/// lattice, 0 otherwise, up to roundoff. Exposed for test oracles.
std::complex<double> char_sum(const FrequencyVector& h, const Rank1Lattice& lattice);

/// True iff h . z mod N are pairwise distinct over the index set. Throws
/// ImpossibilityError when |I| > N (pigeonhole).
bool verify_reconstruction(const Rank1Lattice& lattice, const IndexSet& set);

/// Residues h . z mod N in member order.
std::vector<std::uint64_t> dual_residues(const Rank1Lattice& lattice, const IndexSet& set);

}  // namespace qmch
