#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ppmix {

inline constexpr const char* kVersion = "0.1.0";

// Bad inputs: data, config, parameter domains.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// API misuse: e.g. requesting a conjugate update for a non-conjugate family.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// Runtime numerical failure: Cholesky breakdown, non-finite log-likelihood.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogTwoPi = 1.8378770664093454835606594728112353;

inline double logit(double t) { return std::log(t / (1.0 - t)); }
inline double inv_logit(double w) { return 1.0 / (1.0 + std::exp(-w)); }

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }
inline double log_normal_pdf(double x, double mean, double var) {
  const double d = x - mean;
  return -0.5 * (kLogTwoPi + std::log(var) + d * d / var);
}

double log_sum_exp(std::span<const double> v);

uint64_t splitmix64(uint64_t x);
uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

// Deterministic RNG handle. One per chain / per parallel worker; `spawn`
// derives an independent stream from the construction seed so parallel
// schedules cannot change results.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), gen_(splitmix64(seed ^ 0x6a09e667f3bcc908ull)) {}

  uint64_t seed() const { return seed_; }
  Rng spawn(uint64_t stream) const {
    return Rng(splitmix64(seed_ + 0x9e3779b97f4a7c15ull * (stream + 1)));
  }

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(gen_); }
  // strictly inside (0,1)
  double uniform_open() {
    double u;
    do {
      u = uniform();
    } while (u <= 0.0 || u >= 1.0);
    return u;
  }
  double normal(double mean = 0.0, double sd = 1.0) {
    return std::normal_distribution<double>(mean, sd)(gen_);
  }
  // shape/rate parametrization, E = shape/rate
  double gamma(double shape, double rate) {
    return std::gamma_distribution<double>(shape, 1.0)(gen_) / rate;
  }
  double inv_gamma(double shape, double scale) { return scale / std::gamma_distribution<double>(shape, 1.0)(gen_); }
  double beta(double a, double b) {
    const double x = std::gamma_distribution<double>(a, 1.0)(gen_);
    const double y = std::gamma_distribution<double>(b, 1.0)(gen_);
    return x / (x + y);
  }
  double chi_square(double df) { return 2.0 * std::gamma_distribution<double>(df / 2.0, 1.0)(gen_); }
  long poisson(double mean) { return std::poisson_distribution<long>(mean)(gen_); }
  double exponential(double rate) { return std::exponential_distribution<double>(rate)(gen_); }

  std::vector<double> dirichlet(std::span<const double> shapes);

  // index draw from unnormalized log weights
  int categorical_logw(std::span<const double> logw);
  int categorical(std::span<const double> probs);

  std::mt19937_64& engine() { return gen_; }

 private:
  uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace ppmix
