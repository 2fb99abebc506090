#include "qmch/test_functions.hpp"

#include <array>
#include <cmath>
#include <istream>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>

#include "qmch/errors.hpp"
#include "qmch/points.hpp"

namespace qmch {

namespace {

const double kKvScale =
    8.0 * std::sqrt(6.0) * std::sqrt(std::numbers::pi) /
    std::sqrt(6369.0 * std::numbers::pi - 4096.0);

struct GaussLegendre {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Nodes by Newton iteration on the Legendre recurrence.
GaussLegendre gauss_legendre(std::size_t order) {
  GaussLegendre rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (std::size_t i = 0; i < order; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(order) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= order; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      dp = static_cast<double>(order) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussLegendre& quad_rule() {
  static const GaussLegendre rule = gauss_legendre(24);
  return rule;
}

std::complex<double> integrate_half(double lo, double hi, std::int64_t h, std::size_t panels) {
  const auto& rule = quad_rule();
  CompensatedSum re, im;
  const double width = (hi - lo) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double a = lo + width * static_cast<double>(p);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = a + 0.5 * width * (rule.nodes[i] + 1.0);
      const double w = 0.5 * width * rule.weights[i];
      const double f = kv_factor(x);
      const double t = -2.0 * std::numbers::pi * static_cast<double>(h) * x;
      re.add(w * f * std::cos(t));
      im.add(w * f * std::sin(t));
    }
  }
  return {re.value(), im.value()};
}

std::complex<double> kv_fourier_quadrature(std::int64_t h) {
  const std::size_t base_panels =
      std::max<std::size_t>(8, static_cast<std::size_t>(std::llabs(h) / 2 + 1));
  std::complex<double> coarse = integrate_half(0.0, 0.5, h, base_panels) +
                                integrate_half(0.5, 1.0, h, base_panels);
  for (std::size_t panels = 2 * base_panels;; panels *= 2) {
    const std::complex<double> fine =
        integrate_half(0.0, 0.5, h, panels) + integrate_half(0.5, 1.0, h, panels);
    if (std::abs(fine - coarse) < 1e-13) return fine;
    coarse = fine;
    if (panels > (1u << 20)) throw std::logic_error("kv coefficient quadrature stalled");
  }
}

}  // namespace

double kv_factor(double x) {
  const double s = x > 0.5 ? 1.0 : (x < 0.5 ? -1.0 : 0.0);
  const double t = std::sin(2.0 * std::numbers::pi * x);
  const double t3 = t * t * t;
  return kKvScale * (4.0 + s * (t3 + t3 * t));
}

std::complex<double> kv_fourier(std::int64_t h) {
  static std::map<std::int64_t, std::complex<double>> memo;
  static std::mutex mutex;
  const std::int64_t key = std::llabs(h);
  std::complex<double> value;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) {
      value = it->second;
      return h >= 0 ? value : std::conj(value);
    }
  }
  value = kv_fourier_quadrature(key);
  {
    std::lock_guard<std::mutex> lock(mutex);
    memo.emplace(key, value);
  }
  return h >= 0 ? value : std::conj(value);
}

TestFunction make_kv(std::size_t dimension) {
  TestFunction f;
  f.name = "kv";
  f.dimension = dimension;
  f.norm_sq = 1.0;  // each factor has unit L2 norm
  f.eval = [](std::span<const double> x) {
    double prod = 1.0;
    for (double xi : x) prod *= kv_factor(xi);
    return prod;
  };
  f.coeff = [](const FrequencyVector& h) {
    std::complex<double> prod = 1.0;
    for (auto hj : h.comps) prod *= kv_fourier(hj);
    return prod;
  };
  return f;
}

TestFunction make_kv_weighted(std::size_t dimension, double omega_c, double omega_a) {
  std::vector<double> omega(dimension);
  for (std::size_t j = 0; j < dimension; ++j) {
    omega[j] = omega_c * std::pow(static_cast<double>(j + 1), -omega_a);
  }
  TestFunction f;
  f.name = "kv_weighted";
  f.dimension = dimension;
  {
    // |1 + w g|^2 = 1 + 2 w ghat(0) + w^2 for a unit-norm factor g
    const double g0 = kv_fourier(0).real();
    double norm_sq = 1.0;
    for (double w : omega) norm_sq *= 1.0 + 2.0 * w * g0 + w * w;
    f.norm_sq = norm_sq;
  }
  f.eval = [omega](std::span<const double> x) {
    double prod = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) prod *= 1.0 + omega[j] * kv_factor(x[j]);
    return prod;
  };
  f.coeff = [omega](const FrequencyVector& h) {
    std::complex<double> prod = 1.0;
    for (std::size_t j = 0; j < h.comps.size(); ++j) {
      std::complex<double> c = omega[j] * kv_fourier(h.comps[j]);
      if (h.comps[j] == 0) c += 1.0;
      prod *= c;
    }
    return prod;
  };
  return f;
}

namespace {

constexpr std::array<int, 16> kWavePattern = {+1, +1, +1, +1, -1, -1, -1, -1,
                                              +1, +1, -1, -1, +1, -1, +1, -1};

}  // namespace

double square_wave(double x) {
  if (x < 0.0 || x >= 1.0) throw ConfigError("square wave argument outside [0,1)");
  return static_cast<double>(kWavePattern[static_cast<std::size_t>(x * 16.0)]);
}

std::vector<double> square_wave_walsh_coeffs() {
  // (1/16) sum_k pattern[k] wal_h(k/16): each term is +-1, so the sums are
  // exact integers over 16.
  std::vector<double> coeffs(16);
  for (std::uint64_t h = 0; h < 16; ++h) {
    int acc = 0;
    for (std::uint64_t k = 0; k < 16; ++k) {
      int e = 0;
      for (int bit = 0; bit < 4; ++bit) {
        const int hb = static_cast<int>((h >> bit) & 1);
        const int xb = static_cast<int>((k >> (3 - bit)) & 1);
        e ^= hb & xb;
      }
      acc += kWavePattern[k] * (e == 0 ? 1 : -1);
    }
    coeffs[h] = static_cast<double>(acc) / 16.0;
  }
  return coeffs;
}

TestFunction make_square_wave() {
  TestFunction f;
  f.name = "square";
  f.dimension = 1;
  f.norm_sq = 1.0;  // values are +-1
  f.eval = [](std::span<const double> x) { return square_wave(x[0]); };
  const auto coeffs = square_wave_walsh_coeffs();
  f.coeff = [coeffs](const FrequencyVector& h) {
    if (h.kind != BasisKind::kWalsh) throw ConfigError("square wave uses walsh coefficients");
    const auto hj = h.comps[0];
    return std::complex<double>(hj < 16 ? coeffs[static_cast<std::size_t>(hj)] : 0.0, 0.0);
  };
  return f;
}

void write_coeff_cache(std::ostream& os, const std::vector<CoeffCacheEntry>& entries,
                       double tol) {
  os << "# tol=" << tol << '\n';
  os.precision(17);
  for (const auto& e : entries) {
    os << e.name << ' ' << e.h << ' ' << e.value.real() << ' ' << e.value.imag() << '\n';
  }
}

std::vector<CoeffCacheEntry> read_coeff_cache(std::istream& is) {
  std::vector<CoeffCacheEntry> entries;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    CoeffCacheEntry e;
    double re = 0.0, im = 0.0;
    if (!(ss >> e.name >> e.h >> re >> im)) throw ConfigError("bad coefficient cache line");
    e.value = {re, im};
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace qmch
