// Shared fixture builders for the test suites.
#pragma once

#include <vector>

#include "diskroute/generators.hpp"

namespace fixtures {

using namespace diskroute;

inline std::vector<Site> chain(int n, double spacing = 1.0) {
  std::vector<Site> sites(n);
  for (int i = 0; i < n; ++i) sites[i] = {i, {i * spacing, 0.0}};
  return sites;
}

inline std::vector<Site> uniform(int n, std::uint64_t seed) {
  return generate_instance({GeneratorKind::UniformSquare, n, seed});
}

// Random-walk clusters: connected, general position, diameter grows with
// the cluster count.
inline std::vector<Site> cluster_walk(int n, int clusters, std::uint64_t seed,
                                      double radius = 0.05) {
  GenConfig cfg{GeneratorKind::Clustered, n, seed, clusters, radius};
  return generate_instance(cfg);
}

}  // namespace fixtures
