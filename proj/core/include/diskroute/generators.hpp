#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diskroute/geometry.hpp"

namespace diskroute {

/// Deterministic splitmix64 generator. The standard distributions are
/// implementation-defined, so seeded outputs go through these helpers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next_u64();
  double next_double();  // [0, 1)
  double uniform(double lo, double hi);
  std::int64_t next_below(std::int64_t n);  // [0, n)

 private:
  std::uint64_t state_;
};

enum class GeneratorKind { UniformSquare, Clustered, Chain, Grid };

GeneratorKind generator_from_name(const std::string& name);
std::string generator_name(GeneratorKind kind);

struct GenConfig {
  GeneratorKind kind = GeneratorKind::UniformSquare;
  int n = 0;
  std::uint64_t seed = 1;
  int clusters = 10;            // Clustered only
  double cluster_radius = 0.01; // Clustered only; capped at 0.07 so the
                                // cluster line stays connected
};

/// Generates a connected instance (rejection-resamples the randomized
/// generators up to a bound and throws if connectivity is unachievable).
std::vector<Site> generate_instance(const GenConfig& config);

}  // namespace diskroute
