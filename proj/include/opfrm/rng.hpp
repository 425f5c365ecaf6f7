#pragma once

#include <cstdint>
#include <random>

namespace opfrm {

/// Deterministic random stream keyed by (seed, stream_id).
///
/// Identical keys reproduce identical draw sequences; distinct stream ids
/// give streams suitable for parallel replicates. All distribution draws are
/// generated from the raw 64-bit stream by fixed algorithms, so sequences do
/// not depend on the standard library implementation.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  /// Uniform on the open interval (0, 1).
  double uniform();
  double uniform(double lo, double hi);

  /// Standard normal (Marsaglia polar method).
  double normal();
  double normal(double mean, double sd) { return mean + sd * normal(); }

  /// Exponential with unit rate.
  double exponential();

  /// Gamma(shape, rate) via Marsaglia-Tsang squeeze.
  double gamma(double shape, double rate);

  /// InverseGamma(shape, rate): 1/X with X ~ Gamma(shape, rate).
  double inverse_gamma(double shape, double rate);

  double beta(double a, double b);

  bool bernoulli(double p) { return uniform() < p; }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace opfrm
