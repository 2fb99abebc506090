#include "qmch/rank1.hpp"

#include <cmath>
#include <numbers>
#include <unordered_set>

namespace qmch {

void Rank1Lattice::validate() const {
  if (modulus < 2) throw ConfigError("lattice modulus must be >= 2");
  for (auto zj : z) {
    if (zj == 0 || zj >= modulus)
      throw ConfigError("generating vector components must lie in {1,...,N-1}");
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t i = 3; i * i <= n; i += 2) {
    if (n % i == 0) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n <= 2) return 2;
  while (!is_prime(n)) ++n;
  return n;
}

RationalPointSet generate_points(const Rank1Lattice& lattice) {
  lattice.validate();
  const std::uint64_t N = lattice.modulus;
  RationalPointSet points(N, lattice.dim());
  std::vector<std::uint64_t> row(lattice.dim(), 0);
  for (std::uint64_t n = 0; n < N; ++n) {
    for (std::size_t j = 0; j < lattice.dim(); ++j) {
      row[j] = (n * lattice.z[j]) % N;  // N <= 2^32 keeps this in range
    }
    points.append(row);
  }
  return points;
}

std::uint64_t dual_residue(const FrequencyVector& h, const Rank1Lattice& lattice) {
  if (h.dim() != lattice.dim()) throw ConfigError("frequency/lattice dimension mismatch");
  const std::int64_t N = static_cast<std::int64_t>(lattice.modulus);
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < h.dim(); ++j) {
    const std::int64_t hj = ((h.comps[j] % N) + N) % N;
    acc = (acc + hj * static_cast<std::int64_t>(lattice.z[j] % static_cast<std::uint64_t>(N))) % N;
  }
  return static_cast<std::uint64_t>(acc);
}

bool is_dual(const FrequencyVector& h, const Rank1Lattice& lattice) {
  return dual_residue(h, lattice) == 0;
}

std::complex<double> char_sum(const FrequencyVector& h, const Rank1Lattice& lattice) {
  const std::uint64_t N = lattice.modulus;
  const std::uint64_t r = dual_residue(h, lattice);
  // exp(2 pi i h . x_n) = exp(2 pi i n r / N): the phase is an exact
  // rational multiple of 2 pi, reduced before any floating evaluation.
  CompensatedSum re, im;
  for (std::uint64_t n = 0; n < N; ++n) {
    const std::uint64_t phase = (n * r) % N;
    const double t = 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(N);
    re.add(std::cos(t));
    im.add(std::sin(t));
  }
  const double inv = 1.0 / static_cast<double>(N);
  return {re.value() * inv, im.value() * inv};
}

bool verify_reconstruction(const Rank1Lattice& lattice, const IndexSet& set) {
  if (set.size() > lattice.modulus)
    throw ImpossibilityError("reconstruction impossible: |I| exceeds the lattice size");
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(set.size() * 2);
  for (const auto& h : set.members) {
    if (!seen.insert(dual_residue(h, lattice)).second) return false;
  }
  return true;
}

std::vector<std::uint64_t> dual_residues(const Rank1Lattice& lattice, const IndexSet& set) {
  std::vector<std::uint64_t> out;
  out.reserve(set.size());
  for (const auto& h : set.members) out.push_back(dual_residue(h, lattice));
  return out;
}

}  // namespace qmch
