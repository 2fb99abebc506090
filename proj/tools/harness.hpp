#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmch::cli {

inline const std::vector<std::uint64_t> kDefaultPrimeLadder = {127, 251, 509, 1021, 2039, 4093};

struct ConstructParams {
  std::string kind = "R";  // R | S | recon | poly
  std::uint64_t n = 127;
  std::size_t d = 2;
  double alpha = 2.0;
  std::string gamma = "pow:1:2";
  double cross_threshold = 0.0;  // recon: threshold on r(h)^2
  std::uint32_t base = 2;        // poly
  std::size_t m = 6;             // poly
  std::string cache;
  std::string out;
  std::string gnuplot;
};

struct PointsParams {
  std::string preset;  // fib-lattice | fib-poly | ""
  std::size_t fib_m = 7;  // fib-poly: modulus degree, 2^m points
  std::uint64_t n = 89;
  std::string z = "1,55";
  std::uint32_t base = 2;
  std::size_t m = 0;
  std::string poly_p;  // coefficient list, lowest degree first
  std::string poly_q;  // semicolon-separated coefficient lists
  std::string out;
  std::string gnuplot;
};

struct ConvergenceParams {
  std::string func = "kv";  // kv | kv_weighted
  std::size_t d = 2;
  std::vector<std::uint64_t> ladder = kDefaultPrimeLadder;
  double tau = 2.9;
  double alpha_cbc = 4.0;
  double alpha_space = 3.5;
  std::string gamma = "pow:1:3.5";
  std::string criterion = "R";  // R | S
  double omega_c = 1.0;         // kv_weighted only
  double omega_a = 8.0;
  std::string cache;
  std::string out;
  std::string gnuplot;
};

struct TimingParams {
  std::size_t d = 3;
  double alpha = 2.0;
  double tau = 1.9;
  std::string gamma = "pow:1:2";
  std::vector<std::uint64_t> m_ladder = {10, 20, 40, 80, 160, 320};
  std::size_t reps = 3;
  std::string out;
  std::string gnuplot;
};

struct DenoiseParams {
  std::string preset = "fig4";  // fig4 | fig5-square
  std::size_t trials = 50;
  std::uint64_t seed = 20240915;
  double lambda = 0.016;
  double snr_db = 15.0;
  double tau = 3.7;             // fig4 index-set threshold exponent
  std::string out;
  std::string gnuplot;
};

int run_construct(const ConstructParams& params);
int run_points(const PointsParams& params);
int run_convergence(const ConvergenceParams& params);
int run_timing(const TimingParams& params);
int run_denoise(const DenoiseParams& params);

}  // namespace qmch::cli
