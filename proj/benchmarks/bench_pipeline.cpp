#include <benchmark/benchmark.h>

#include "diskroute/density_net.hpp"
#include "diskroute/generators.hpp"
#include "diskroute/harness.hpp"
#include "diskroute/middle_site.hpp"
#include "diskroute/router.hpp"
#include "diskroute/scheme.hpp"

namespace {

using namespace diskroute;

std::vector<Site> uniform_instance(int n) {
  return generate_instance({GeneratorKind::UniformSquare, n, 42});
}

void BM_BuildUdg(benchmark::State& state) {
  const auto sites = uniform_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto g = build_udg(sites);
    benchmark::DoNotOptimize(g);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildUdg)->Range(64, 1024)->Complexity();

void BM_Dijkstra(benchmark::State& state) {
  const auto g = build_udg(uniform_instance(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto t = shortest_paths(g, 0);
    benchmark::DoNotOptimize(t);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dijkstra)->Range(64, 1024)->Complexity();

void BM_EmstHierarchy(benchmark::State& state) {
  const auto g = build_udg(uniform_instance(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    Emst t = build_emst(g);
    Hierarchy h = build_hierarchy(t);
    assign_labels(h);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_EmstHierarchy)->Range(64, 512);

void BM_Wspd(benchmark::State& state) {
  const auto g = build_udg(uniform_instance(256));
  Emst t = build_emst(g);
  Hierarchy h = build_hierarchy(t);
  assign_labels(h);
  for (auto _ : state) {
    auto w = build_wspd(h, g.sites, static_cast<double>(state.range(0)));
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_Wspd)->Arg(13)->Arg(40)->Arg(1000);

void BM_MiddleSitesFast(benchmark::State& state) {
  const auto g = build_udg(uniform_instance(static_cast<int>(state.range(0))));
  const auto spt = shortest_paths(g, 0);
  for (auto _ : state) {
    auto m = compute_middle_sites_fast(spt);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_MiddleSitesFast)->Range(64, 1024);

void BM_MiddleSitesBrute(benchmark::State& state) {
  const auto g = build_udg(uniform_instance(static_cast<int>(state.range(0))));
  const auto spt = shortest_paths(g, 0);
  for (auto _ : state) {
    for (SiteId t = 1; t < g.n(); ++t) {
      if (spt.dist[t] == kInf) continue;
      benchmark::DoNotOptimize(middle_site(spt, t));
    }
  }
}
BENCHMARK(BM_MiddleSitesBrute)->Range(64, 1024);

void BM_BuildScheme(benchmark::State& state) {
  const auto sites = uniform_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto s = build_scheme(sites, 1.0);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_BuildScheme)->Range(64, 256);

void BM_RouteChain(benchmark::State& state) {
  const auto sites =
      generate_instance({GeneratorKind::Chain, static_cast<int>(state.range(0)), 1});
  const auto g = build_udg(sites);
  const auto scheme = build_scheme(sites, 1.0, 13.0);
  for (auto _ : state) {
    auto trace = route(scheme, g, 0, g.n() - 1);
    benchmark::DoNotOptimize(trace);
  }
}
BENCHMARK(BM_RouteChain)->Range(64, 512);

}  // namespace

BENCHMARK_MAIN();
