#include "qmch/cbc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qmch/errors.hpp"

namespace qmch {

namespace {

std::vector<double> kernel_table(int alpha, std::uint64_t N) {
  std::vector<double> kernel(N);
  for (std::uint64_t r = 0; r < N; ++r) {
    kernel[r] = korobov_kernel(alpha, static_cast<double>(r) / static_cast<double>(N));
  }
  return kernel;
}

enum class Objective { kR, kS };

Rank1Lattice cbc_minimize(std::uint64_t N, std::size_t d, const ProductWeights& w,
                          Objective objective) {
  if (!is_prime(N)) throw ConfigError("CBC construction requires a prime modulus");
  if (d == 0) throw ConfigError("dimension must be positive");
  const int alpha = w.integer_alpha();
  const auto kernel = kernel_table(alpha, N);

  Rank1Lattice lattice;
  lattice.modulus = N;
  lattice.z = {1};

  // Partial product over the fixed coordinates, per lattice point.
  std::vector<double> partial(N);
  {
    const double g = w.gamma(1);
    for (std::uint64_t n = 0; n < N; ++n) {
      const double f = 1.0 + g * g * kernel[n % N];
      partial[n] = objective == Objective::kR ? f : f * f;
    }
  }

  for (std::size_t s = 2; s <= d; ++s) {
    const double g = w.gamma(s);
    std::uint64_t best = 0;
    double best_value = 0.0;
    for (std::uint64_t cand = 1; cand < N; ++cand) {
      CompensatedSum acc;
      std::uint64_t r = 0;
      for (std::uint64_t n = 0; n < N; ++n) {
        const double f = 1.0 + g * g * kernel[r];
        acc.add(partial[n] * (objective == Objective::kR ? f : f * f));
        r += cand;
        if (r >= N) r -= N;
      }
      const double value = acc.value();
      if (best == 0 || value < best_value) {
        best = cand;
        best_value = value;
      }
    }
    lattice.z.push_back(best);
    std::uint64_t r = 0;
    for (std::uint64_t n = 0; n < N; ++n) {
      const double f = 1.0 + g * g * kernel[r];
      partial[n] *= objective == Objective::kR ? f : f * f;
      r += best;
      if (r >= N) r -= N;
    }
  }
  return lattice;
}

}  // namespace

Rank1Lattice cbc_r(std::uint64_t modulus, std::size_t dimension, const ProductWeights& w) {
  return cbc_minimize(modulus, dimension, w, Objective::kR);
}

Rank1Lattice cbc_s(std::uint64_t modulus, std::size_t dimension, const ProductWeights& w) {
  return cbc_minimize(modulus, dimension, w, Objective::kS);
}

std::optional<Rank1Lattice> cbc_reconstruction(std::uint64_t modulus, std::size_t dimension,
                                               const IndexSet& set) {
  if (set.kind != BasisKind::kTrig)
    throw ConfigError("reconstruction CBC operates on trig index sets");
  if (set.dimension != dimension) throw ConfigError("index set/dimension mismatch");
  if (modulus < 2) throw ConfigError("modulus must be >= 2");
  const std::int64_t N = static_cast<std::int64_t>(modulus);

  // Projection of the members onto the first `len` coordinates, deduplicated.
  auto project = [&](std::size_t len) {
    std::vector<std::vector<std::int64_t>> proj;
    proj.reserve(set.size());
    for (const auto& h : set.members) {
      proj.emplace_back(h.comps.begin(), h.comps.begin() + len);
    }
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
    return proj;
  };

  auto distinct_residues = [&](const std::vector<std::uint64_t>& residues) {
    std::vector<std::uint64_t> sorted = residues;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  };

  Rank1Lattice lattice;
  lattice.modulus = modulus;
  lattice.z = {1};

  {
    // Multiplication by a unit is a bijection mod N, so the first stage is
    // decided by the projections alone.
    auto proj = project(1);
    std::vector<std::uint64_t> residues;
    residues.reserve(proj.size());
    for (const auto& h : proj)
      residues.push_back(static_cast<std::uint64_t>(((h[0] % N) + N) % N));
    if (!distinct_residues(residues)) return std::nullopt;
  }

  for (std::size_t len = 2; len <= dimension; ++len) {
    auto proj = project(len);
    std::vector<std::uint64_t> base(proj.size());
    std::vector<std::int64_t> last(proj.size());
    for (std::size_t k = 0; k < proj.size(); ++k) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j + 1 < len; ++j) {
        const std::int64_t hj = ((proj[k][j] % N) + N) % N;
        acc = (acc + hj * static_cast<std::int64_t>(lattice.z[j])) % N;
      }
      base[k] = static_cast<std::uint64_t>(acc);
      last[k] = ((proj[k][len - 1] % N) + N) % N;
    }

    std::vector<std::uint32_t> stamp(modulus, 0);
    std::uint32_t epoch = 0;
    std::optional<std::uint64_t> found;
    for (std::uint64_t cand = 1; cand < modulus; ++cand) {
      if (std::gcd(cand, modulus) != 1) continue;  // search within G_d(N)
      ++epoch;
      bool ok = true;
      for (std::size_t k = 0; k < proj.size(); ++k) {
        const std::uint64_t r =
            (base[k] + static_cast<std::uint64_t>(last[k]) * cand) % modulus;
        if (stamp[r] == epoch) {
          ok = false;
          break;
        }
        stamp[r] = epoch;
      }
      if (ok) {
        found = cand;
        break;
      }
    }
    if (!found) return std::nullopt;
    lattice.z.push_back(*found);
  }
  return lattice;
}

}  // namespace qmch
