#include "ppmix/common.hpp"

#include <algorithm>
#include <cstdio>

namespace ppmix {

double log_sum_exp(std::span<const double> v) {
  if (v.empty()) return -std::numeric_limits<double>::infinity();
  const double m = *std::max_element(v.begin(), v.end());
  if (!std::isfinite(m)) return m;
  double acc = 0.0;
  for (double x : v) acc += std::exp(x - m);
  return m + std::log(acc);
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string(buf);
}

std::vector<double> Rng::dirichlet(std::span<const double> shapes) {
  std::vector<double> g(shapes.size());
  double total = 0.0;
  for (size_t i = 0; i < shapes.size(); ++i) {
    g[i] = std::gamma_distribution<double>(shapes[i], 1.0)(gen_);
    total += g[i];
  }
  if (total <= 0.0) {
    // all gammas underflowed (tiny shapes); fall back to the largest shape
    size_t k = 0;
    for (size_t i = 1; i < shapes.size(); ++i)
      if (shapes[i] > shapes[k]) k = i;
    std::fill(g.begin(), g.end(), 0.0);
    g[k] = 1.0;
    return g;
  }
  for (double& x : g) x /= total;
  return g;
}

int Rng::categorical_logw(std::span<const double> logw) {
  const double lse = log_sum_exp(logw);
  double u = uniform_open();
  double acc = 0.0;
  for (size_t i = 0; i < logw.size(); ++i) {
    acc += std::exp(logw[i] - lse);
    if (u <= acc) return static_cast<int>(i);
  }
  return static_cast<int>(logw.size()) - 1;
}

int Rng::categorical(std::span<const double> probs) {
  double u = uniform_open();
  double acc = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u <= acc) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;
}

}  // namespace ppmix
