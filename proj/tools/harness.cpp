#include "harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "qmch/cache.hpp"
#include "qmch/cbc.hpp"
#include "qmch/errors.hpp"
#include "qmch/gram.hpp"
#include "qmch/hyperinterp.hpp"
#include "qmch/lasso.hpp"
#include "qmch/noise.hpp"
#include "qmch/poly_lattice.hpp"
#include "qmch/test_functions.hpp"

namespace qmch::cli {

namespace {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

void write_header(std::ostream& os, const std::string& subcommand, const KeyValues& kv) {
  std::string payload = "subcommand=" + subcommand;
  os << "# subcommand=" << subcommand << '\n';
  for (const auto& [k, v] : kv) {
    os << "# " << k << '=' << v << '\n';
    payload += ";" + k + "=" + v;
  }
  os << "# config_sha1=" << sha1_hex(payload) << '\n';
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file: " + path);
  return out;
}

void write_gnuplot_stub(const std::string& path, const std::string& csv,
                        const std::string& plot_line) {
  if (path.empty()) return;
  std::ofstream gp(path);
  if (!gp) throw ConfigError("cannot open gnuplot stub: " + path);
  gp << "set datafile separator ','\n";
  gp << "set datafile commentschars '#'\n";
  gp << "csv = '" << csv << "'\n";
  gp << plot_line << '\n';
}

std::vector<std::uint64_t> parse_uint_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoull(tok));
  if (out.empty()) throw ConfigError("empty integer list");
  return out;
}

// Exact decimal when the denominator is of the form 2^a 5^b, else shortest
// round-trip via max precision.
std::string coord_text(std::uint64_t num, std::uint64_t den) {
  if (num == 0) return "0";
  std::uint64_t d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d == 1) {
    const int digits = std::max(twos, fives);
    unsigned __int128 scaled = num;
    for (int i = twos; i < digits; ++i) scaled *= 2;
    for (int i = fives; i < digits; ++i) scaled *= 5;
    std::string frac(static_cast<std::size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i) {
      frac[static_cast<std::size_t>(i)] = static_cast<char>('0' + static_cast<int>(scaled % 10));
      scaled /= 10;
    }
    if (digits == 0) return "0";
    return "0." + frac;
  }
  std::ostringstream os;
  os.precision(17);
  os << static_cast<double>(num) / static_cast<double>(den);
  return os.str();
}

}  // namespace

int run_construct(const ConstructParams& p) {
  if (p.out.empty()) throw ConfigError("construct needs --out");
  KeyValues kv = {{"kind", p.kind},       {"d", std::to_string(p.d)},
                  {"alpha", fmt(p.alpha)}, {"gamma", p.gamma}};

  const GammaRule gamma = GammaRule::parse(p.gamma);
  const ProductWeights weights(p.alpha, gamma);

  if (p.kind == "R" || p.kind == "S") {
    kv.emplace_back("n", std::to_string(p.n));
    VectorCacheKey key{p.kind, p.n, p.d, p.alpha, gamma.spec()};
    std::vector<std::uint64_t> z;
    bool cached = false;
    if (!p.cache.empty()) {
      if (auto hit = vector_cache_lookup(p.cache, key)) {
        z = *hit;
        cached = true;
      }
    }
    if (!cached) {
      const Rank1Lattice lattice =
          p.kind == "R" ? cbc_r(p.n, p.d, weights) : cbc_s(p.n, p.d, weights);
      z = lattice.z;
      if (!p.cache.empty()) vector_cache_append(p.cache, key, z);
    }
    const Rank1Lattice lattice{p.n, z};
    const CriterionValue crit =
        p.kind == "R" ? r_criterion(lattice, weights) : s_criterion(lattice, weights);
    auto out = open_out(p.out);
    write_header(out, "construct", kv);
    out << p.kind << ' ' << p.n << ' ' << p.d << ' ' << fmt(p.alpha) << ' ' << gamma.spec();
    for (auto zj : z) out << ' ' << zj;
    out << '\n';
    if (cached) std::cout << "cached\n";
    std::cout << "criterion " << p.kind << " = " << fmt(crit.value) << '\n';
    return 0;
  }

  if (p.kind == "recon") {
    if (!(p.cross_threshold >= 1.0))
      throw ConfigError("recon construction needs --cross-m >= 1");
    kv.emplace_back("n", std::to_string(p.n));
    kv.emplace_back("cross_m", fmt(p.cross_threshold));
    const IndexSet set =
        enumerate_cross(p.d, p.cross_threshold, weights, BasisKind::kTrig);
    if (set.size() > p.n)
      throw ImpossibilityError("reconstruction impossible: |I| = " +
                               std::to_string(set.size()) + " exceeds N");
    // cache key folds the threshold into the gamma spec field
    VectorCacheKey key{"recon", p.n, p.d, p.alpha,
                       gamma.spec() + ";M=" + fmt(p.cross_threshold)};
    std::vector<std::uint64_t> z;
    bool cached = false;
    if (!p.cache.empty()) {
      if (auto hit = vector_cache_lookup(p.cache, key)) {
        z = *hit;
        cached = true;
      }
    }
    if (!cached) {
      const auto lattice = cbc_reconstruction(p.n, p.d, set);
      if (!lattice) {
        std::cout << "recon |I|=" << set.size() << " failed\n";
        return 3;
      }
      z = lattice->z;
      if (!p.cache.empty()) vector_cache_append(p.cache, key, z);
    }
    auto out = open_out(p.out);
    write_header(out, "construct", kv);
    out << "recon " << p.n << ' ' << p.d << ' ' << fmt(p.alpha) << ' ' << key.gamma_spec;
    for (auto zj : z) out << ' ' << zj;
    out << '\n';
    if (cached) std::cout << "cached\n";
    std::cout << "recon |I|=" << set.size() << " ok\n";
    return 0;
  }

  if (p.kind == "poly") {
    kv.emplace_back("b", std::to_string(p.base));
    kv.emplace_back("m", std::to_string(p.m));
    const FieldPoly modulus = smallest_irreducible(p.base, p.m);
    PolyCacheKey key{p.base, p.m, modulus.print(), p.alpha, gamma.spec(), p.d};
    std::vector<FieldPoly> q;
    bool cached = false;
    if (!p.cache.empty()) {
      if (auto hit = poly_cache_lookup(p.cache, key)) {
        q = *hit;
        cached = true;
      }
    }
    if (!cached) {
      const PolyLattice lattice = cbc_poly(p.m, p.d, weights, p.base);
      q = lattice.gen;
      if (!p.cache.empty()) poly_cache_append(p.cache, key, q);
    }
    const PolyLattice lattice(p.base, p.m, modulus, q);
    const CriterionValue crit = rbreve_criterion(lattice, weights);
    auto out = open_out(p.out);
    write_header(out, "construct", kv);
    out << "poly " << p.base << ' ' << p.m << ' ' << modulus.print() << ' ' << fmt(p.alpha)
        << ' ' << gamma.spec();
    for (const auto& qj : q) out << ' ' << qj.print();
    out << '\n';
    if (cached) std::cout << "cached\n";
    std::cout << "criterion Rbreve = " << fmt(crit.value) << '\n';
    return 0;
  }

  throw ConfigError("unknown construction kind: " + p.kind);
}

int run_points(const PointsParams& p) {
  if (p.out.empty()) throw ConfigError("points needs --out");
  KeyValues kv;

  RationalPointSet points(1, 1);
  if (p.preset == "fib-lattice" || (p.preset.empty() && p.poly_p.empty())) {
    const std::uint64_t n = p.n;
    const auto z = parse_uint_list(p.z);
    kv = {{"preset", p.preset.empty() ? "custom" : p.preset},
          {"n", std::to_string(n)},
          {"z", p.z}};
    points = generate_points(Rank1Lattice{n, z});
  } else if (p.preset == "fib-poly") {
    // modulus = the degree-m Fibonacci polynomial (recurrence index m+1),
    // generator (1, F_m); 2^m points
    const FieldPoly modulus = fibonacci_poly(p.fib_m + 1, p.base);
    const FieldPoly q2 = fibonacci_poly(p.fib_m, p.base);
    kv = {{"preset", p.preset},
          {"m", std::to_string(p.fib_m)},
          {"p", modulus.print()},
          {"q", "1;" + q2.print()}};
    points = generate_poly_points(
        PolyLattice(p.base, p.fib_m, modulus, {FieldPoly::one(p.base), q2}));
  } else if (!p.poly_p.empty()) {
    const FieldPoly modulus = FieldPoly::parse(p.base, p.poly_p);
    std::vector<FieldPoly> q;
    std::stringstream ss(p.poly_q);
    std::string tok;
    while (std::getline(ss, tok, ';')) q.push_back(FieldPoly::parse(p.base, tok));
    kv = {{"b", std::to_string(p.base)},
          {"m", std::to_string(p.m)},
          {"p", p.poly_p},
          {"q", p.poly_q}};
    points = generate_poly_points(PolyLattice(p.base, p.m, modulus, q));
  } else {
    throw ConfigError("unknown points preset: " + p.preset);
  }

  auto out = open_out(p.out);
  write_header(out, "points", kv);
  for (std::size_t j = 0; j < points.dimension(); ++j) {
    if (j) out << ',';
    out << 'x' << (j + 1);
  }
  out << '\n';
  for (std::size_t n = 0; n < points.size(); ++n) {
    for (std::size_t j = 0; j < points.dimension(); ++j) {
      if (j) out << ',';
      out << coord_text(points.numerator(n, j), points.denominator());
    }
    out << '\n';
  }
  write_gnuplot_stub(p.gnuplot, p.out, "plot csv using 1:2 with points pt 7 ps 0.5");
  std::cout << "points " << points.size() << '\n';
  return 0;
}

int run_convergence(const ConvergenceParams& p) {
  if (p.out.empty()) throw ConfigError("convergence needs --out");
  if (p.func != "kv" && p.func != "kv_weighted")
    throw ConfigError("unknown test function: " + p.func);

  const GammaRule gamma = GammaRule::parse(p.gamma);
  const ProductWeights cbc_weights(p.alpha_cbc, gamma);
  const ProductWeights space_weights(p.alpha_space, gamma);
  const TestFunction f = p.func == "kv" ? make_kv(p.d)
                                        : make_kv_weighted(p.d, p.omega_c, p.omega_a);

  std::string ladder_text;
  for (std::size_t i = 0; i < p.ladder.size(); ++i) {
    if (i) ladder_text += ',';
    ladder_text += std::to_string(p.ladder[i]);
  }
  KeyValues kv = {{"func", p.func},          {"d", std::to_string(p.d)},
                  {"ladder", ladder_text},   {"tau", fmt(p.tau)},
                  {"alpha_cbc", fmt(p.alpha_cbc)}, {"alpha_space", fmt(p.alpha_space)},
                  {"gamma", p.gamma},        {"criterion", p.criterion}};

  auto out = open_out(p.out);
  write_header(out, "convergence", kv);
  out << "N,card,eta,l2_error,status\n";

  for (const std::uint64_t n : p.ladder) {
    Rank1Lattice lattice{n, {}};
    VectorCacheKey key{p.criterion, n, p.d, p.alpha_cbc, gamma.spec()};
    bool cached = false;
    if (!p.cache.empty()) {
      if (auto hit = vector_cache_lookup(p.cache, key)) {
        lattice.z = *hit;
        cached = true;
      }
    }
    if (!cached) {
      lattice = p.criterion == "S" ? cbc_s(n, p.d, cbc_weights) : cbc_r(n, p.d, cbc_weights);
      if (!p.cache.empty()) vector_cache_append(p.cache, key, lattice.z);
    }

    const double threshold = std::pow(static_cast<double>(n), p.tau);
    const IndexSet set = enumerate_cross(p.d, threshold, space_weights, BasisKind::kTrig);
    const EtaEstimate eta = estimate_eta(lattice, set);

    out << n << ',' << set.size() << ',' << fmt(eta.eta) << ',';
    if (eta.eta >= 1.0) {
      out << ",skipped\n";
      continue;
    }
    const RationalPointSet points = generate_points(lattice);
    std::vector<double> values(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto x = points.point(i);
      values[i] = f.eval(x);
    }
    const Approximant approx = qmc_hyperinterp(SampleSet(points, std::move(values)), set);
    std::vector<std::complex<double>> fhat;
    fhat.reserve(set.size());
    for (const auto& h : set.members) fhat.push_back(f.coeff(h));
    const double err = l2_error_analytic(approx, fhat, f.norm_sq);
    out << fmt(err) << ",ok\n";
  }
  write_gnuplot_stub(p.gnuplot, p.out,
                     "set logscale xy\nplot csv using 1:4 with linespoints title 'L2 error'");
  return 0;
}

int run_timing(const TimingParams& p) {
  if (p.out.empty()) throw ConfigError("timing needs --out");
  if (p.reps < 3) throw ConfigError("timing needs at least 3 repetitions");
  const GammaRule gamma = GammaRule::parse(p.gamma);
  const ProductWeights weights(p.alpha, gamma);

  std::string ladder_text;
  for (std::size_t i = 0; i < p.m_ladder.size(); ++i) {
    if (i) ladder_text += ',';
    ladder_text += std::to_string(p.m_ladder[i]);
  }
  KeyValues kv = {{"d", std::to_string(p.d)},  {"alpha", fmt(p.alpha)},
                  {"tau", fmt(p.tau)},          {"gamma", p.gamma},
                  {"m_ladder", ladder_text},    {"reps", std::to_string(p.reps)}};

  auto out = open_out(p.out);
  write_header(out, "timing", kv);
  out << "M,card,N,t_recon_cbc,t_s_cbc\n";

  using clock = std::chrono::steady_clock;
  for (const std::uint64_t M : p.m_ladder) {
    const double threshold = std::pow(static_cast<double>(M), p.tau);
    const IndexSet set = enumerate_cross(p.d, threshold, weights, BasisKind::kTrig);

    std::vector<double> recon_times, s_times;
    std::uint64_t found_n = 0;
    for (std::size_t rep = 0; rep < p.reps; ++rep) {
      const auto t0 = clock::now();
      std::uint64_t candidate = next_prime(std::max<std::uint64_t>(set.size(), 2));
      std::optional<Rank1Lattice> lattice;
      while (true) {
        lattice = cbc_reconstruction(candidate, p.d, set);
        if (lattice) break;
        candidate = next_prime(candidate + 1);
        if (candidate > 1000 * std::max<std::uint64_t>(set.size(), 2))
          throw ResourceCapError("reconstruction search exceeded the prime budget");
      }
      const auto t1 = clock::now();
      found_n = candidate;
      recon_times.push_back(std::chrono::duration<double>(t1 - t0).count());

      const auto t2 = clock::now();
      (void)cbc_s(next_prime(found_n), p.d, weights);
      const auto t3 = clock::now();
      s_times.push_back(std::chrono::duration<double>(t3 - t2).count());
    }
    std::sort(recon_times.begin(), recon_times.end());
    std::sort(s_times.begin(), s_times.end());
    const double recon_median = recon_times[recon_times.size() / 2];
    const double s_median = s_times[s_times.size() / 2];
    out << M << ',' << set.size() << ',' << found_n << ',' << fmt(recon_median) << ','
        << fmt(s_median) << '\n';
  }
  write_gnuplot_stub(p.gnuplot, p.out,
                     "set logscale xy\nplot csv using 2:4 with linespoints title 'recon CBC', "
                     "csv using 2:5 with linespoints title 'S CBC'");
  return 0;
}

int run_denoise(const DenoiseParams& p) {
  if (p.out.empty()) throw ConfigError("denoise needs --out");
  KeyValues kv = {{"preset", p.preset},   {"trials", std::to_string(p.trials)},
                  {"seed", std::to_string(p.seed)}, {"lambda", fmt(p.lambda)},
                  {"snr_db", fmt(p.snr_db)}};

  IndexSet set;
  std::unique_ptr<RationalPointSet> points;
  TestFunction f;
  double eta_value = 0.0;

  if (p.preset == "fig4") {
    kv.emplace_back("tau", fmt(p.tau));
    const std::uint64_t n = 4093;
    f = make_kv(2);
    const GammaRule gamma = GammaRule::parse("pow:1:3.5");
    const ProductWeights space_weights(3.5, gamma);
    const double threshold = std::pow(static_cast<double>(n), p.tau);
    set = enumerate_cross(2, threshold, space_weights, BasisKind::kTrig);
    const auto lattice = cbc_reconstruction(n, 2, set);
    if (!lattice)
      throw ImpossibilityError("no reconstruction lattice for the fig4 preset index set");
    eta_value = estimate_eta(*lattice, set).eta;
    points = std::make_unique<RationalPointSet>(generate_points(*lattice));
  } else if (p.preset == "fig5-square") {
    const std::size_t m = 12;
    const std::uint64_t n = 1ull << m;
    f = make_square_wave();
    std::vector<FrequencyVector> members;
    members.reserve(n / 2);
    for (std::uint64_t h = 0; h < n / 2; ++h) {
      members.push_back({BasisKind::kWalsh, {static_cast<std::int64_t>(h)}});
    }
    set = IndexSet::from_members(BasisKind::kWalsh, 1, std::move(members));
    points = std::make_unique<RationalPointSet>(n, 1);
    for (std::uint64_t k = 0; k < n; ++k) points->append({k});
    const PolyLattice grid_view(2, m, FieldPoly(2, [] {
                                  std::vector<std::uint8_t> c(13, 0);
                                  c[12] = 1;
                                  return c;
                                }()),
                                {FieldPoly::one(2)});
    eta_value = estimate_eta(grid_view, set).eta;
  } else {
    throw ConfigError("unknown denoise preset: " + p.preset);
  }
  kv.emplace_back("eta", fmt(eta_value));
  kv.emplace_back("card", std::to_string(set.size()));

  std::vector<double> clean(points->size());
  for (std::size_t i = 0; i < points->size(); ++i) {
    const auto x = points->point(i);
    clean[i] = f.eval(x);
  }
  const SampleSet clean_samples(*points, clean);

  std::vector<std::complex<double>> fhat;
  fhat.reserve(set.size());
  for (const auto& h : set.members) fhat.push_back(f.coeff(h));

  auto out = open_out(p.out);
  write_header(out, "denoise", kv);
  out << "trial,seed,l2_noisy,l2_lasso,bound,lambda\n";

  double sum_noisy = 0.0, sum_lasso = 0.0;
  std::size_t wins = 0;
  for (std::size_t t = 0; t < p.trials; ++t) {
    NoiseSpec spec{p.snr_db, p.seed + t};
    const SampleSet noisy = add_noise(clean_samples, spec);
    const double sigma = derived_sigma(spec, clean_samples.values);
    const double bound =
        sigma * std::sqrt(static_cast<double>(set.size()) / static_cast<double>(noisy.size()));
    const Approximant plain = qmc_hyperinterp(noisy, set);
    const Approximant shrunk = lasso_qmc_hyperinterp(noisy, set, {p.lambda});
    const double err_plain = l2_error_analytic(plain, fhat, f.norm_sq);
    const double err_lasso = l2_error_analytic(shrunk, fhat, f.norm_sq);
    sum_noisy += err_plain;
    sum_lasso += err_lasso;
    if (err_lasso < err_plain) ++wins;
    out << t << ',' << (p.seed + t) << ',' << fmt(err_plain) << ',' << fmt(err_lasso) << ','
        << fmt(bound) << ',' << fmt(p.lambda) << '\n';
  }
  out << "# summary mean_l2_noisy=" << fmt(sum_noisy / static_cast<double>(p.trials))
      << " mean_l2_lasso=" << fmt(sum_lasso / static_cast<double>(p.trials)) << " lasso_wins="
      << wins << "/" << p.trials << '\n';
  write_gnuplot_stub(p.gnuplot, p.out,
                     "plot csv using 1:3 with points title 'plain', csv using 1:4 with points "
                     "title 'lasso'");
  std::cout << "lasso_wins " << wins << "/" << p.trials << '\n';
  return 0;
}

}  // namespace qmch::cli
