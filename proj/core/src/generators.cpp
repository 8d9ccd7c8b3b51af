#include "diskroute/generators.hpp"

#include <algorithm>
#include <cmath>

#include "diskroute/error.hpp"
#include "diskroute/unit_disk_graph.hpp"

namespace diskroute {

std::uint64_t Rng::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * next_double();
}

std::int64_t Rng::next_below(std::int64_t n) {
  return static_cast<std::int64_t>(next_double() * static_cast<double>(n));
}

GeneratorKind generator_from_name(const std::string& name) {
  if (name == "uniform-square") return GeneratorKind::UniformSquare;
  if (name == "clustered") return GeneratorKind::Clustered;
  if (name == "chain") return GeneratorKind::Chain;
  if (name == "grid") return GeneratorKind::Grid;
  throw Error("unknown generator: " + name);
}

std::string generator_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::UniformSquare: return "uniform-square";
    case GeneratorKind::Clustered: return "clustered";
    case GeneratorKind::Chain: return "chain";
    case GeneratorKind::Grid: return "grid";
  }
  return "?";
}

namespace {

std::vector<Site> gen_uniform(int n, Rng& rng) {
  const double side = std::sqrt(static_cast<double>(n)) / 2.0;
  std::vector<Site> sites(n);
  for (int i = 0; i < n; ++i) {
    sites[i] = {i, {rng.uniform(0.0, side), rng.uniform(0.0, side)}};
  }
  return sites;
}

std::vector<Site> gen_clustered(int n, int clusters, double radius,
                                Rng& rng) {
  clusters = std::max(1, std::min(clusters, n));
  // cluster centers along a jittered line so consecutive clusters stay
  // unit-disk adjacent and the diameter grows with the cluster count
  std::vector<Point> centers(clusters);
  for (int k = 0; k < clusters; ++k) {
    centers[k] = {0.75 * k + rng.uniform(-0.05, 0.05),
                  rng.uniform(-0.05, 0.05)};
  }
  const double r_cap = std::min(radius, 0.07);
  std::vector<Site> sites(n);
  for (int i = 0; i < n; ++i) {
    const Point& c = centers[i % clusters];
    const double ang = rng.uniform(0.0, 2.0 * M_PI);
    const double r = r_cap * std::sqrt(rng.next_double());
    sites[i] = {i, {c.x + r * std::cos(ang), c.y + r * std::sin(ang)}};
  }
  return sites;
}

std::vector<Site> gen_chain(int n) {
  std::vector<Site> sites(n);
  for (int i = 0; i < n; ++i) {
    sites[i] = {i, {static_cast<double>(i), 0.0}};
  }
  return sites;
}

std::vector<Site> gen_grid(int n, Rng& rng) {
  const int cols = static_cast<int>(std::ceil(std::sqrt(n)));
  std::vector<Site> sites(n);
  for (int i = 0; i < n; ++i) {
    const int row = i / cols;
    const int col = i % cols;
    // jitter breaks the inter-point distance ties of the exact lattice
    sites[i] = {i, {0.95 * col + rng.uniform(-0.02, 0.02),
                    0.95 * row + rng.uniform(-0.02, 0.02)}};
  }
  return sites;
}

bool connected(const std::vector<Site>& sites) {
  const UnitDiskGraph g = build_udg(sites);
  const auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(),
                     [&](int c) { return c == comp[0]; });
}

}  // namespace

std::vector<Site> generate_instance(const GenConfig& config) {
  if (config.n <= 0) throw Error("generate_instance: n must be positive");
  constexpr int kMaxTries = 64;
  for (int attempt = 0; attempt < kMaxTries; ++attempt) {
    Rng rng(config.seed + 0x100000001ULL * static_cast<std::uint64_t>(attempt));
    std::vector<Site> sites;
    switch (config.kind) {
      case GeneratorKind::UniformSquare:
        sites = gen_uniform(config.n, rng);
        break;
      case GeneratorKind::Clustered:
        sites = gen_clustered(config.n, config.clusters,
                              config.cluster_radius, rng);
        break;
      case GeneratorKind::Chain:
        sites = gen_chain(config.n);
        break;
      case GeneratorKind::Grid:
        sites = gen_grid(config.n, rng);
        break;
    }
    if (connected(sites)) return sites;
  }
  throw Error("generate_instance: could not produce a connected instance (" +
              generator_name(config.kind) + ", n=" + std::to_string(config.n) +
              ", seed=" + std::to_string(config.seed) + ")");
}

}  // namespace diskroute
