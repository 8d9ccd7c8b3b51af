#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "diskroute/generators.hpp"
#include "diskroute/scheme_io.hpp"
#include "diskroute/verify.hpp"

namespace diskroute {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvariant = 2;
inline constexpr int kExitIo = 3;

struct GenOptions {
  GenConfig config;
  std::string out;
};

struct BuildOptions {
  std::string instance;
  double epsilon = 1.0;
  std::optional<double> c_override;
  double alpha = 200.0;
  int dense_threshold = 16;  // switch to the extended scheme above this
  std::string out;
};

struct RouteOptions {
  std::string scheme;
  std::string instance;
  std::string pairs = "all";  // all | <count> | <src>:<dst>
  std::uint64_t seed = 1;
  std::int64_t step_limit = -1;
  std::string format = "csv";  // csv | json
  std::string out;             // empty: rows to stdout
};

struct VerifyOptions {
  std::string instance;
  double epsilon = 1.0;
  std::optional<double> c_override;
  double alpha = 200.0;
};

/// Builds the per-component scheme container for an instance: extended when
/// the density bound exceeds the threshold, a direct next-hop map in the
/// small-diameter regime, the plain scheme otherwise.
SchemeFile build_scheme_file(const std::vector<Site>& sites, double epsilon,
                             std::optional<double> c_override, double alpha,
                             int dense_threshold);

struct PairRow {
  StretchRecord rec;
  std::vector<SiteId> path;
};

struct RouteReport {
  std::vector<PairRow> rows;
  StretchSummary summary;
};

/// Routes ordered pairs against a scheme file. Throws on a requested pair
/// across components.
RouteReport route_pairs(const SchemeFile& file,
                        const std::vector<Site>& sites,
                        const std::vector<std::pair<SiteId, SiteId>>& pairs,
                        std::int64_t step_limit = -1);

/// Same-component ordered pairs per the pair spec (all, a sampled count,
/// or one explicit src:dst).
std::vector<std::pair<SiteId, SiteId>> expand_pair_spec(
    const std::string& spec, const std::vector<Site>& sites,
    std::uint64_t seed);

std::string format_report_csv(const RouteReport& report);
std::string format_report_json(const RouteReport& report);
std::vector<StretchRecord> parse_report_csv(const std::string& text);
RouteReport parse_report_json(const std::string& text);

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);
int cmd_build(const BuildOptions& opt, std::ostream& out, std::ostream& err);
int cmd_route(const RouteOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace diskroute
