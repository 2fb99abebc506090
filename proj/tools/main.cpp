#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "harness.hpp"
#include "qmch/errors.hpp"

namespace {

std::vector<std::uint64_t> parse_ladder(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoull(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QMC hyperinterpolation on the unit cube: lattice construction, "
               "approximation and denoising experiments"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");

  qmch::cli::ConstructParams construct;
  auto* c = app.add_subcommand("construct", "CBC construction of generating vectors");
  c->add_option("--kind", construct.kind, "R | S | recon | poly")->capture_default_str();
  c->add_option("--n", construct.n, "lattice size (prime for R/S)")->capture_default_str();
  c->add_option("--d", construct.d, "dimension")->capture_default_str();
  c->add_option("--alpha", construct.alpha, "smoothness")->capture_default_str();
  c->add_option("--gamma", construct.gamma, "weight rule, e.g. pow:1:2")->capture_default_str();
  c->add_option("--cross-m", construct.cross_threshold,
                "recon: hyperbolic-cross threshold on r^2");
  c->add_option("--b", construct.base, "poly: field base")->capture_default_str();
  c->add_option("--m", construct.m, "poly: modulus degree")->capture_default_str();
  c->add_option("--cache", construct.cache, "generating-vector cache file");
  c->add_option("--out", construct.out, "output record file")->required();
  c->add_option("--gnuplot", construct.gnuplot, "gnuplot stub path");

  qmch::cli::PointsParams points;
  auto* pt = app.add_subcommand("points", "emit a point set as CSV");
  pt->add_option("--preset", points.preset, "fib-lattice | fib-poly");
  pt->add_option("--fib-m", points.fib_m, "fib-poly: modulus degree (2^m points)")
      ->capture_default_str();
  pt->add_option("--n", points.n, "lattice size")->capture_default_str();
  pt->add_option("--z", points.z, "generating vector, comma-separated")->capture_default_str();
  pt->add_option("--b", points.base, "poly: field base")->capture_default_str();
  pt->add_option("--m", points.m, "poly: modulus degree");
  pt->add_option("--p", points.poly_p, "poly: modulus coefficients, lowest first");
  pt->add_option("--q", points.poly_q, "poly: generator coefficient lists, ';'-separated");
  pt->add_option("--out", points.out, "output CSV")->required();
  pt->add_option("--gnuplot", points.gnuplot, "gnuplot stub path");

  qmch::cli::ConvergenceParams convergence;
  std::string conv_ladder;
  auto* cv = app.add_subcommand("convergence", "L2 error of QMC hyperinterpolation over a "
                                               "prime ladder");
  cv->add_option("--func", convergence.func, "kv | kv_weighted")->capture_default_str();
  cv->add_option("--d", convergence.d, "dimension")->capture_default_str();
  cv->add_option("--ladder", conv_ladder, "comma-separated primes");
  cv->add_option("--tau", convergence.tau, "index threshold exponent: r^2 <= N^tau")
      ->capture_default_str();
  cv->add_option("--alpha-cbc", convergence.alpha_cbc, "CBC smoothness (integer)")
      ->capture_default_str();
  cv->add_option("--alpha-space", convergence.alpha_space, "index-set smoothness")
      ->capture_default_str();
  cv->add_option("--gamma", convergence.gamma, "weight rule")->capture_default_str();
  cv->add_option("--criterion", convergence.criterion, "R | S")->capture_default_str();
  cv->add_option("--omega-c", convergence.omega_c, "kv_weighted scale")->capture_default_str();
  cv->add_option("--omega-a", convergence.omega_a, "kv_weighted decay")->capture_default_str();
  cv->add_option("--cache", convergence.cache, "generating-vector cache file");
  cv->add_option("--out", convergence.out, "output CSV")->required();
  cv->add_option("--gnuplot", convergence.gnuplot, "gnuplot stub path");

  qmch::cli::TimingParams timing;
  std::string timing_ladder;
  auto* tm = app.add_subcommand("timing", "reconstruction CBC vs S CBC wall time");
  tm->add_option("--d", timing.d, "dimension")->capture_default_str();
  tm->add_option("--alpha", timing.alpha, "smoothness")->capture_default_str();
  tm->add_option("--tau", timing.tau, "threshold exponent: r^2 <= M^tau")->capture_default_str();
  tm->add_option("--gamma", timing.gamma, "weight rule")->capture_default_str();
  tm->add_option("--m-ladder", timing_ladder, "comma-separated M values");
  tm->add_option("--reps", timing.reps, "repetitions (median reported)")->capture_default_str();
  tm->add_option("--out", timing.out, "output CSV")->required();
  tm->add_option("--gnuplot", timing.gnuplot, "gnuplot stub path");

  qmch::cli::DenoiseParams denoise;
  auto* dn = app.add_subcommand("denoise", "plain vs Lasso QMC hyperinterpolation under noise");
  dn->add_option("--preset", denoise.preset, "fig4 | fig5-square")->capture_default_str();
  dn->add_option("--trials", denoise.trials, "seeded trials")->capture_default_str();
  dn->add_option("--seed", denoise.seed, "base seed")->capture_default_str();
  dn->add_option("--lambda", denoise.lambda, "soft threshold")->capture_default_str();
  dn->add_option("--snr", denoise.snr_db, "signal-to-noise ratio in dB")->capture_default_str();
  dn->add_option("--tau", denoise.tau, "fig4 index threshold exponent")->capture_default_str();
  dn->add_option("--out", denoise.out, "output CSV")->required();
  dn->add_option("--gnuplot", denoise.gnuplot, "gnuplot stub path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c->parsed()) return qmch::cli::run_construct(construct);
    if (pt->parsed()) return qmch::cli::run_points(points);
    if (cv->parsed()) {
      if (!conv_ladder.empty()) convergence.ladder = parse_ladder(conv_ladder);
      return qmch::cli::run_convergence(convergence);
    }
    if (tm->parsed()) {
      if (!timing_ladder.empty()) timing.m_ladder = parse_ladder(timing_ladder);
      return qmch::cli::run_timing(timing);
    }
    if (dn->parsed()) return qmch::cli::run_denoise(denoise);
  } catch (const qmch::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const qmch::ImpossibilityError& e) {
    std::cerr << "impossible: " << e.what() << '\n';
    return 3;
  } catch (const qmch::ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
