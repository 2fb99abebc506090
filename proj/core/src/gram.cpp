#include "qmch/gram.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "qmch/errors.hpp"
#include "qmch/poly_lattice.hpp"

namespace qmch {

namespace {

constexpr std::size_t kMaxGramDim = 5000;
constexpr std::size_t kDenseFallbackDim = 512;
constexpr double kPowerTolerance = 1e-10;
constexpr std::size_t kMaxPowerIterations = 10000;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

void apply(const HermitianMatrix& b, const std::vector<std::complex<double>>& v,
           std::vector<std::complex<double>>& out) {
  const std::size_t n = b.n;
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> acc = 0.0;
    const std::complex<double>* row = &b.a[i * n];
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
}

double norm2(const std::vector<std::complex<double>>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

double dense_spectral_norm(const HermitianMatrix& b) {
  Eigen::MatrixXcd m(b.n, b.n);
  for (std::size_t i = 0; i < b.n; ++i)
    for (std::size_t j = 0; j < b.n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = b.at(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  double best = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) best = std::max(best, std::abs(ev(i)));
  return best;
}

}  // namespace

EtaEstimate spectral_norm(const HermitianMatrix& b) {
  EtaEstimate est;
  est.gram_dim = b.n;
  if (b.n == 0) return est;

  std::vector<std::complex<double>> v(b.n), bv(b.n), bbv(b.n);
  for (std::size_t i = 0; i < b.n; ++i) {
    const auto r = splitmix64(0x9D2C5680u + i);
    const auto s = splitmix64(r);
    v[i] = {static_cast<double>(r >> 11) / 9007199254740992.0 - 0.5,
            static_cast<double>(s >> 11) / 9007199254740992.0 - 0.5};
  }
  double vn = norm2(v);
  for (auto& x : v) x /= vn;

  double prev = -1.0;
  for (std::size_t it = 1; it <= kMaxPowerIterations; ++it) {
    apply(b, v, bv);
    const double bn = norm2(bv);
    est.iterations = it;
    if (bn < 1e-300) {
      est.eta = 0.0;
      est.converged = true;
      return est;
    }
    est.eta = bn;  // |Bv| / |v| with |v| = 1
    if (prev >= 0.0 && std::abs(est.eta - prev) <= kPowerTolerance) {
      est.converged = true;
      return est;
    }
    prev = est.eta;
    apply(b, bv, bbv);  // iterate B^2 so paired +-lambda spectra still converge
    const double bbn = norm2(bbv);
    if (bbn < 1e-300) {
      est.eta = bn;  // B v in the kernel of B: |B| equals the last estimate
      est.converged = true;
      return est;
    }
    for (std::size_t i = 0; i < b.n; ++i) v[i] = bbv[i] / bbn;
  }
  est.converged = false;
  if (b.n < kDenseFallbackDim) {
    est.eta = dense_spectral_norm(b);
    est.converged = true;
    est.dense_fallback = true;
  }
  return est;
}

HermitianMatrix gram_deviation(const RationalPointSet& points, const IndexSet& set,
                               std::uint32_t base) {
  if (set.size() > kMaxGramDim) throw ConfigError("Gram dimension exceeds the desk-scale cap");
  if (set.dimension != points.dimension()) throw ConfigError("points/index dimension mismatch");
  const std::size_t n = set.size();
  const std::size_t N = points.size();
  const std::uint64_t D = points.denominator();
  HermitianMatrix b;
  b.n = n;
  b.a.assign(n * n, 0.0);

  if (set.kind == BasisKind::kTrig) {
    // q_{h'} conj(q_h) at a rational point is exp(2 pi i (h'-h).x) with an
    // exactly reduced phase.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        CompensatedSum re, im;
        for (std::size_t p = 0; p < N; ++p) {
          std::int64_t phase = 0;
          const std::int64_t Di = static_cast<std::int64_t>(D);
          for (std::size_t k = 0; k < set.dimension; ++k) {
            const std::int64_t dh = set.members[j].comps[k] - set.members[i].comps[k];
            const std::int64_t r = ((dh % Di) + Di) % Di;
            phase = (phase + r * static_cast<std::int64_t>(points.numerator(p, k) % D)) % Di;
          }
          const double t = 2.0 * std::numbers::pi * static_cast<double>(phase) /
                           static_cast<double>(D);
          re.add(std::cos(t));
          im.add(std::sin(t));
        }
        const std::complex<double> g(re.value() / static_cast<double>(N),
                                     im.value() / static_cast<double>(N));
        b.at(i, j) = g;
        b.at(j, i) = std::conj(g);
      }
      b.at(i, i) -= 1.0;
    }
  } else {
    std::size_t m = 0;
    {
      std::uint64_t t = D;
      while (t > 1) {
        if (t % base != 0) throw ConfigError("walsh Gram needs a base-power denominator");
        t /= base;
        ++m;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        CompensatedSum re, im;
        for (std::size_t p = 0; p < N; ++p) {
          std::uint32_t e = 0;
          for (std::size_t k = 0; k < set.dimension; ++k) {
            const std::uint64_t hj = static_cast<std::uint64_t>(set.members[j].comps[k]);
            const std::uint64_t hi = static_cast<std::uint64_t>(set.members[i].comps[k]);
            e = (e + wal_exponent(hj, points.numerator(p, k), m, base) +
                 (base - wal_exponent(hi, points.numerator(p, k), m, base) % base)) %
                base;
          }
          const double t = 2.0 * std::numbers::pi * static_cast<double>(e) /
                           static_cast<double>(base);
          re.add(std::cos(t));
          im.add(std::sin(t));
        }
        const std::complex<double> g(re.value() / static_cast<double>(N),
                                     im.value() / static_cast<double>(N));
        b.at(i, j) = g;
        b.at(j, i) = std::conj(g);
      }
      b.at(i, i) -= 1.0;
    }
  }
  return b;
}

EtaEstimate estimate_eta(const RationalPointSet& points, const IndexSet& set,
                         std::uint32_t base) {
  return spectral_norm(gram_deviation(points, set, base));
}

namespace {

EtaEstimate eta_from_residues(const std::vector<std::uint64_t>& residues, std::size_t n) {
  HermitianMatrix b;
  b.n = n;
  b.a.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && residues[i] == residues[j]) b.at(i, j) = 1.0;
    }
  }
  return spectral_norm(b);
}

}  // namespace

EtaEstimate estimate_eta(const Rank1Lattice& lattice, const IndexSet& set) {
  if (set.kind != BasisKind::kTrig) throw ConfigError("rank-1 eta expects a trig index set");
  if (set.size() > kMaxGramDim) throw ConfigError("Gram dimension exceeds the desk-scale cap");
  return eta_from_residues(dual_residues(lattice, set), set.size());
}

EtaEstimate estimate_eta(const PolyLattice& lattice, const IndexSet& set) {
  if (set.kind != BasisKind::kWalsh) throw ConfigError("poly-lattice eta expects a walsh index set");
  if (set.size() > kMaxGramDim) throw ConfigError("Gram dimension exceeds the desk-scale cap");
  return eta_from_residues(dual_poly_residues(lattice, set), set.size());
}

}  // namespace qmch
