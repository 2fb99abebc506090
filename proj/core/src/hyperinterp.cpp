#include "qmch/hyperinterp.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>

#include "qmch/poly_lattice.hpp"

namespace qmch {

namespace {

std::size_t digits_of(std::uint64_t denominator, std::uint32_t base) {
  std::size_t m = 0;
  std::uint64_t t = denominator;
  while (t > 1) {
    if (t % base != 0)
      throw ConfigError("walsh samples need a base-power point denominator");
    t /= base;
    ++m;
  }
  return m;
}

}  // namespace

std::complex<double> discrete_inner(const SampleSet& samples, const FrequencyVector& h,
                                    std::uint32_t base) {
  const auto& pts = samples.points;
  if (h.dim() != pts.dimension()) throw ConfigError("frequency/sample dimension mismatch");
  const std::size_t N = samples.size();
  CompensatedSum re, im;

  if (h.kind == BasisKind::kTrig) {
    const std::int64_t D = static_cast<std::int64_t>(pts.denominator());
    for (std::size_t n = 0; n < N; ++n) {
      std::int64_t phase = 0;
      for (std::size_t j = 0; j < h.dim(); ++j) {
        const std::int64_t r = ((h.comps[j] % D) + D) % D;
        phase = (phase + r * static_cast<std::int64_t>(pts.numerator(n, j))) % D;
      }
      // conj(q_h) contributes exp(-2 pi i phase / D)
      const double t = -2.0 * std::numbers::pi * static_cast<double>(phase) /
                       static_cast<double>(D);
      re.add(samples.values[n] * std::cos(t));
      im.add(samples.values[n] * std::sin(t));
    }
  } else {
    h.validate();
    const std::size_t m = digits_of(pts.denominator(), base);
    for (std::size_t n = 0; n < N; ++n) {
      std::uint32_t e = 0;
      for (std::size_t j = 0; j < h.dim(); ++j) {
        e = (e + wal_exponent(static_cast<std::uint64_t>(h.comps[j]), pts.numerator(n, j), m,
                              base)) %
            base;
      }
      const double t = -2.0 * std::numbers::pi * static_cast<double>(e) /
                       static_cast<double>(base);
      re.add(samples.values[n] * std::cos(t));
      im.add(samples.values[n] * std::sin(t));
    }
  }
  const double inv = 1.0 / static_cast<double>(N);
  return {re.value() * inv, im.value() * inv};
}

std::complex<double> Approximant::coeff_at(const FrequencyVector& h) const {
  const auto pos = index.find(h);
  if (!pos) throw ConfigError("frequency outside the approximant's index set");
  return coeffs[*pos];
}

double Approximant::coeff_l2() const {
  double s = 0.0;
  for (const auto& c : coeffs) s += std::norm(c);
  return std::sqrt(s);
}

double Approximant::coeff_l1() const {
  double s = 0.0;
  for (const auto& c : coeffs) s += std::abs(c);
  return s;
}

Approximant qmc_hyperinterp(const SampleSet& samples, const IndexSet& set, std::uint32_t base) {
  Approximant a;
  a.index = set;
  a.coeffs.reserve(set.size());
  for (const auto& h : set.members) a.coeffs.push_back(discrete_inner(samples, h, base));
  a.provenance = Approximant::Provenance::kQmc;
  return a;
}

std::complex<double> evaluate(const Approximant& a, std::span<const double> x,
                              std::size_t walsh_depth, std::uint32_t base) {
  if (x.size() != a.index.dimension) throw ConfigError("evaluation point dimension mismatch");
  CompensatedSum re, im;
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
    const auto& h = a.index.members[k];
    std::complex<double> q;
    if (a.index.kind == BasisKind::kTrig) {
      double dot = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j)
        dot += static_cast<double>(h.comps[j]) * x[j];
      q = std::polar(1.0, 2.0 * std::numbers::pi * dot);
    } else {
      q = 1.0;
      for (std::size_t j = 0; j < x.size(); ++j)
        q *= wal_real(static_cast<std::uint64_t>(h.comps[j]), x[j], walsh_depth, base);
    }
    const auto term = a.coeffs[k] * q;
    re.add(term.real());
    im.add(term.imag());
  }
  return {re.value(), im.value()};
}

double evaluate_real(const Approximant& a, std::span<const double> x, std::size_t walsh_depth,
                     std::uint32_t base) {
  const auto v = evaluate(a, x, walsh_depth, base);
  if (std::abs(v.imag()) > 1e-8)
    throw ConfigError("evaluation has a non-negligible imaginary residue");
  return v.real();
}

double l2_error_analytic(const Approximant& a, const std::vector<std::complex<double>>& fhat,
                         double f_norm_sq) {
  if (fhat.size() != a.coeffs.size()) throw ConfigError("fhat must cover the index set");
  CompensatedSum diff_sq, fhat_sq;
  for (std::size_t k = 0; k < fhat.size(); ++k) {
    diff_sq.add(std::norm(fhat[k] - a.coeffs[k]));
    fhat_sq.add(std::norm(fhat[k]));
  }
  const double inside = fhat_sq.value();
  if (inside > f_norm_sq + 1e-9)
    throw ConfigError("Bessel violation: coefficient mass exceeds the stated norm");
  double radicand = diff_sq.value() + f_norm_sq - inside;
  if (radicand < 0.0) {
    if (radicand < -1e-12) throw ConfigError("negative error radicand beyond roundoff");
    radicand = 0.0;
  }
  return std::sqrt(radicand);
}

OperatorBoundReport theorem33_bound_check(const Approximant& a, double eta,
                                          const SampleSet& probe,
                                          const std::vector<std::complex<double>>* p_star_coeffs,
                                          std::uint32_t base) {
  OperatorBoundReport report;
  report.approx_l2 = a.coeff_l2();
  report.eta = eta;
  for (double v : probe.values) report.sup_proxy = std::max(report.sup_proxy, std::abs(v));
  report.bound = std::sqrt(1.0 + eta) * report.sup_proxy;
  report.margin = report.bound - report.approx_l2;
  report.holds = report.approx_l2 <= report.bound + 1e-12;
  if (p_star_coeffs != nullptr) {
    if (p_star_coeffs->size() != a.index.size())
      throw ConfigError("p* coefficients must cover the index set");
    Approximant pstar;
    pstar.index = a.index;
    pstar.coeffs = *p_star_coeffs;
    pstar.provenance = Approximant::Provenance::kClassical;
    double worst = 0.0;
    for (std::size_t n = 0; n < probe.size(); ++n) {
      const auto x = probe.points.point(n);
      const auto px = evaluate(pstar, x, 48, base);
      worst = std::max(worst, std::abs(probe.values[n] - px.real()));
    }
    report.best_error_proxy = worst;
  }
  return report;
}

void write_approximant(std::ostream& os, const Approximant& a) {
  const char* prov = a.provenance == Approximant::Provenance::kQmc
                         ? "qmc"
                         : (a.provenance == Approximant::Provenance::kLasso ? "lasso"
                                                                            : "classical");
  os << (a.index.kind == BasisKind::kTrig ? "trig" : "walsh") << ' ' << a.index.dimension << ' '
     << a.index.size() << ' ' << prov;
  if (a.provenance == Approximant::Provenance::kLasso) os << ':' << a.lambda;
  os << '\n';
  os.precision(17);
  for (std::size_t k = 0; k < a.index.size(); ++k) {
    for (auto c : a.index.members[k].comps) os << c << ' ';
    os << a.coeffs[k].real() << ' ' << a.coeffs[k].imag() << '\n';
  }
}

Approximant read_approximant(std::istream& is) {
  std::string basis, prov;
  std::size_t d = 0, count = 0;
  if (!(is >> basis >> d >> count >> prov)) throw ConfigError("bad approximant header");
  const BasisKind kind = basis == "trig" ? BasisKind::kTrig : BasisKind::kWalsh;
  if (basis != "trig" && basis != "walsh") throw ConfigError("unknown basis: " + basis);

  Approximant a;
  std::vector<FrequencyVector> members;
  members.reserve(count);
  std::vector<std::complex<double>> coeffs;
  coeffs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    FrequencyVector v;
    v.kind = kind;
    v.comps.resize(d);
    double re = 0.0, im = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      if (!(is >> v.comps[j])) throw ConfigError("truncated approximant");
    }
    if (!(is >> re >> im)) throw ConfigError("truncated approximant");
    members.push_back(std::move(v));
    coeffs.push_back({re, im});
  }
  // canonical order may differ from file order; realign
  auto set = IndexSet::from_members(kind, d, members);
  a.index = set;
  a.coeffs.assign(set.size(), 0.0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto pos = set.find(members[i]);
    if (!pos) throw ConfigError("duplicate member in approximant file");
    a.coeffs[*pos] = coeffs[i];
  }
  if (prov.rfind("lasso", 0) == 0) {
    a.provenance = Approximant::Provenance::kLasso;
    const auto colon = prov.find(':');
    if (colon != std::string::npos) a.lambda = std::stod(prov.substr(colon + 1));
  } else if (prov == "classical") {
    a.provenance = Approximant::Provenance::kClassical;
  } else {
    a.provenance = Approximant::Provenance::kQmc;
  }
  return a;
}

}  // namespace qmch
