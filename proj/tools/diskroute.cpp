// Command line front end: gen | build | route | verify.
// Exit codes: 0 ok, 1 usage, 2 invariant failure, 3 I/O.

#include <iostream>

#include <CLI11.hpp>

#include "diskroute/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"WSPD-based compact routing for unit disk graphs"};
  app.require_subcommand(1);

  diskroute::GenOptions gen;
  std::string gen_kind = "uniform-square";
  auto* cgen = app.add_subcommand("gen", "generate an instance file");
  cgen->add_option("--gen", gen_kind,
                   "uniform-square | clustered | chain | grid");
  cgen->add_option("--n", gen.config.n, "site count")->required();
  cgen->add_option("--seed", gen.config.seed, "64-bit seed");
  cgen->add_option("--clusters", gen.config.clusters,
                   "cluster count (clustered)");
  cgen->add_option("--cluster-radius", gen.config.cluster_radius,
                   "cluster radius (clustered)");
  cgen->add_option("--out", gen.out, "output instance path")->required();

  diskroute::BuildOptions build;
  double build_c = -1.0;
  auto* cbuild = app.add_subcommand("build", "preprocess into a scheme file");
  cbuild->add_option("--instance", build.instance, "instance path")
      ->required();
  cbuild->add_option("--eps", build.epsilon, "stretch parameter epsilon");
  cbuild->add_option("--c", build_c, "override separation parameter (>= 13)");
  cbuild->add_option("--alpha", build.alpha, "stretch constant alpha");
  cbuild->add_option("--dense-threshold", build.dense_threshold,
                     "density bound above which the extended scheme is used");
  cbuild->add_option("--out", build.out, "output scheme path")->required();

  diskroute::RouteOptions route;
  auto* croute = app.add_subcommand("route", "route pairs and report");
  croute->add_option("--scheme", route.scheme, "scheme path")->required();
  croute->add_option("--instance", route.instance, "instance path")
      ->required();
  croute->add_option("--pairs", route.pairs, "all | <count> | <src>:<dst>");
  croute->add_option("--seed", route.seed, "sampling seed");
  croute->add_option("--step-limit", route.step_limit, "route step limit");
  croute->add_option("--format", route.format, "csv | json");
  croute->add_option("--out", route.out, "rows output path (default stdout)");

  diskroute::VerifyOptions verify;
  double verify_c = -1.0;
  auto* cverify =
      app.add_subcommand("verify", "run the invariant suite on an instance");
  cverify->add_option("--instance", verify.instance, "instance path")
      ->required();
  cverify->add_option("--eps", verify.epsilon, "stretch parameter epsilon");
  cverify->add_option("--c", verify_c, "override separation parameter");
  cverify->add_option("--alpha", verify.alpha, "stretch constant alpha");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : diskroute::kExitUsage;
  }

  try {
    if (cgen->parsed()) {
      gen.config.kind = diskroute::generator_from_name(gen_kind);
      return diskroute::cmd_gen(gen, std::cout, std::cerr);
    }
    if (cbuild->parsed()) {
      if (build_c > 0.0) build.c_override = build_c;
      return diskroute::cmd_build(build, std::cout, std::cerr);
    }
    if (croute->parsed()) {
      return diskroute::cmd_route(route, std::cout, std::cerr);
    }
    if (verify_c > 0.0) verify.c_override = verify_c;
    return diskroute::cmd_verify(verify, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "diskroute: " << e.what() << "\n";
    return diskroute::kExitUsage;
  }
}
