#include "diskroute/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "diskroute/error.hpp"
#include "diskroute/instance_io.hpp"

namespace diskroute {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<Site> component_sites(const std::vector<Site>& sites,
                                  const std::vector<SiteId>& members) {
  std::vector<Site> out;
  out.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    out.push_back({static_cast<SiteId>(i), sites[members[i]].pos});
  }
  return out;
}

}  // namespace

SchemeFile build_scheme_file(const std::vector<Site>& sites, double epsilon,
                             std::optional<double> c_override, double alpha,
                             int dense_threshold) {
  SchemeFile file;
  file.instance_hash = instance_hash(sites);
  file.epsilon = epsilon;
  file.alpha = alpha;

  const UnitDiskGraph g = build_udg(sites);
  const std::vector<int> comp = connected_components(g);
  const int k = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<SiteId>> members(k);
  for (SiteId v = 0; v < g.n(); ++v) members[comp[v]].push_back(v);

  for (int i = 0; i < k; ++i) {
    SchemeComponent c;
    c.sites = members[i];
    const std::vector<Site> local = component_sites(sites, members[i]);
    if (density_upper_bound(local) > dense_threshold) {
      c.payload = build_extended_scheme(local, epsilon, c_override, alpha);
    } else {
      const UnitDiskGraph lg = build_udg(local);
      const double d = graph_diameter(lg);
      if (local.size() == 1 || (d < 2.0 && !c_override.has_value())) {
        c.payload = build_next_hop_table(lg);
      } else {
        c.payload = build_scheme(local, epsilon, c_override, alpha);
      }
    }
    file.components.push_back(std::move(c));
  }
  return file;
}

std::vector<std::pair<SiteId, SiteId>> expand_pair_spec(
    const std::string& spec, const std::vector<Site>& sites,
    std::uint64_t seed) {
  const int n = static_cast<int>(sites.size());
  const UnitDiskGraph g = build_udg(sites);
  const std::vector<int> comp = connected_components(g);

  if (const auto colon = spec.find(':'); colon != std::string::npos) {
    const SiteId s = std::stoi(spec.substr(0, colon));
    const SiteId t = std::stoi(spec.substr(colon + 1));
    if (s < 0 || s >= n || t < 0 || t >= n)
      throw Error("pair spec out of range: " + spec);
    return {{s, t}};
  }
  if (spec == "all") {
    std::vector<std::pair<SiteId, SiteId>> pairs;
    for (SiteId s = 0; s < n; ++s) {
      for (SiteId t = 0; t < n; ++t) {
        if (s != t && comp[s] == comp[t]) pairs.push_back({s, t});
      }
    }
    return pairs;
  }
  std::int64_t count = 0;
  const auto res = std::from_chars(spec.data(), spec.data() + spec.size(), count);
  if (res.ec != std::errc() || res.ptr != spec.data() + spec.size() ||
      count <= 0)
    throw Error("bad pair spec: " + spec + " (want all, a count, or s:t)");
  Rng rng(seed);
  std::vector<std::pair<SiteId, SiteId>> pairs;
  pairs.reserve(count);
  int guard = 0;
  while (static_cast<std::int64_t>(pairs.size()) < count) {
    const SiteId s = static_cast<SiteId>(rng.next_below(n));
    const SiteId t = static_cast<SiteId>(rng.next_below(n));
    if (s != t && comp[s] == comp[t]) pairs.push_back({s, t});
    if (++guard > 1000 * count && pairs.empty())
      throw Error("pair sampling found no routable pair");
  }
  return pairs;
}

RouteReport route_pairs(const SchemeFile& file, const std::vector<Site>& sites,
                        const std::vector<std::pair<SiteId, SiteId>>& pairs,
                        std::int64_t step_limit) {
  const int n = static_cast<int>(sites.size());
  std::vector<int> comp_of(n, -1);
  std::vector<int> local_of(n, -1);
  for (std::size_t ci = 0; ci < file.components.size(); ++ci) {
    const auto& members = file.components[ci].sites;
    for (std::size_t j = 0; j < members.size(); ++j) {
      comp_of[members[j]] = static_cast<int>(ci);
      local_of[members[j]] = static_cast<int>(j);
    }
  }
  std::vector<UnitDiskGraph> graphs(file.components.size());
  std::vector<char> built(file.components.size(), 0);
  auto graph_for = [&](int ci) -> const UnitDiskGraph& {
    if (!built[ci]) {
      graphs[ci] =
          build_udg(component_sites(sites, file.components[ci].sites));
      built[ci] = 1;
    }
    return graphs[ci];
  };
  std::unordered_map<std::int64_t, ShortestPathTree> oracle;
  auto dist_oracle = [&](int ci, SiteId ls) -> const ShortestPathTree& {
    const std::int64_t key = static_cast<std::int64_t>(ci) << 32 | ls;
    auto it = oracle.find(key);
    if (it == oracle.end())
      it = oracle.emplace(key, shortest_paths(graph_for(ci), ls)).first;
    return it->second;
  };

  RouteReport report;
  for (auto [s, t] : pairs) {
    if (s < 0 || s >= n || t < 0 || t >= n)
      throw Error("route_pairs: site out of range");
    if (comp_of[s] != comp_of[t])
      throw Error("route_pairs: sites " + std::to_string(s) + " and " +
                  std::to_string(t) + " are in different components");
    const int ci = comp_of[s];
    const SiteId ls = local_of[s];
    const SiteId lt = local_of[t];
    const UnitDiskGraph& g = graph_for(ci);
    const auto& members = file.components[ci].sites;

    RouteTrace trace;
    if (const auto* scheme =
            std::get_if<RoutingScheme>(&file.components[ci].payload)) {
      trace = route(*scheme, g, ls, lt, step_limit);
    } else if (const auto* ext =
                   std::get_if<ExtendedScheme>(&file.components[ci].payload)) {
      trace = route_extended(*ext, g, ls, lt, step_limit);
    } else {
      const auto& table = std::get<NextHopTable>(file.components[ci].payload);
      const auto path = next_hop_path(table, ls, lt);
      if (path.empty() && ls != lt)
        throw Error("route_pairs: next-hop table has no path");
      trace.path = path.empty() ? std::vector<SiteId>{ls} : path;
      for (std::size_t i = 1; i < trace.path.size(); ++i) {
        trace.distance += *g.edge_weight(trace.path[i - 1], trace.path[i]);
      }
      trace.step_count = static_cast<std::int64_t>(trace.path.size()) - 1;
      trace.delivered = true;
    }

    PairRow row;
    row.rec.src = s;
    row.rec.dst = t;
    row.rec.d_rho = trace.distance;
    row.rec.d_opt = dist_oracle(ci, ls).dist[lt];
    row.rec.ratio = row.rec.d_opt > 0.0 ? row.rec.d_rho / row.rec.d_opt : 1.0;
    row.rec.steps = trace.step_count;
    row.rec.max_header_bits = trace.max_header_bits;
    row.path.reserve(trace.path.size());
    for (SiteId v : trace.path) row.path.push_back(members[v]);
    report.rows.push_back(std::move(row));
  }
  std::vector<StretchRecord> recs;
  recs.reserve(report.rows.size());
  for (const PairRow& r : report.rows) recs.push_back(r.rec);
  report.summary = summarize(recs);
  return report;
}

std::string format_report_csv(const RouteReport& report) {
  std::ostringstream os;
  os << "src,dst,d_rho,d_opt,ratio,steps,max_header_bits\n";
  for (const PairRow& r : report.rows) {
    os << r.rec.src << ',' << r.rec.dst << ',' << fmt_double(r.rec.d_rho)
       << ',' << fmt_double(r.rec.d_opt) << ',' << fmt_double(r.rec.ratio)
       << ',' << r.rec.steps << ',' << r.rec.max_header_bits << '\n';
  }
  return os.str();
}

std::string format_report_json(const RouteReport& report) {
  json rows = json::array();
  for (const PairRow& r : report.rows) {
    rows.push_back({{"src", r.rec.src},
                    {"dst", r.rec.dst},
                    {"path", r.path},
                    {"d_rho", r.rec.d_rho},
                    {"d_opt", r.rec.d_opt},
                    {"ratio", r.rec.ratio},
                    {"steps", r.rec.steps},
                    {"max_header_bits", r.rec.max_header_bits}});
  }
  json j;
  j["pairs"] = std::move(rows);
  j["summary"] = {{"max_ratio", report.summary.max_ratio},
                  {"mean_ratio", report.summary.mean_ratio},
                  {"max_header_bits", report.summary.max_header_bits},
                  {"pair_count", report.summary.pair_count}};
  return j.dump(2) + "\n";
}

std::vector<StretchRecord> parse_report_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) ||
      line != "src,dst,d_rho,d_opt,ratio,steps,max_header_bits")
    throw Error("parse_report_csv: bad header");
  std::vector<StretchRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    StretchRecord r;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    if (!(ls >> r.src >> r.dst >> r.d_rho >> r.d_opt >> r.ratio >> r.steps >>
          r.max_header_bits))
      throw Error("parse_report_csv: bad row: " + line);
    out.push_back(r);
  }
  return out;
}

RouteReport parse_report_json(const std::string& text) {
  const json j = json::parse(text);
  RouteReport report;
  for (const json& row : j.at("pairs")) {
    PairRow r;
    r.rec.src = row.at("src").get<SiteId>();
    r.rec.dst = row.at("dst").get<SiteId>();
    r.path = row.at("path").get<std::vector<SiteId>>();
    r.rec.d_rho = row.at("d_rho").get<double>();
    r.rec.d_opt = row.at("d_opt").get<double>();
    r.rec.ratio = row.at("ratio").get<double>();
    r.rec.steps = row.at("steps").get<std::int64_t>();
    r.rec.max_header_bits = row.at("max_header_bits").get<std::int64_t>();
    report.rows.push_back(std::move(r));
  }
  const json& s = j.at("summary");
  report.summary.max_ratio = s.at("max_ratio").get<double>();
  report.summary.mean_ratio = s.at("mean_ratio").get<double>();
  report.summary.max_header_bits = s.at("max_header_bits").get<std::int64_t>();
  report.summary.pair_count = s.at("pair_count").get<std::size_t>();
  return report;
}

namespace {

std::vector<Site> load_instance_or_throw(const std::string& path) {
  return read_instance_file(path);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  out << text;
}

}  // namespace

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const std::vector<Site> sites = generate_instance(opt.config);
    if (opt.out.empty()) {
      err << "gen: --out is required\n";
      return kExitUsage;
    }
    write_instance_file(opt.out, sites);
    json j;
    j["generator"] = generator_name(opt.config.kind);
    j["n"] = opt.config.n;
    j["seed"] = opt.config.seed;
    j["instance_hash"] = instance_hash(sites);
    j["out"] = opt.out;
    out << j.dump(2) << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "gen: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_build(const BuildOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<Site> sites;
  try {
    sites = load_instance_or_throw(opt.instance);
  } catch (const Error& e) {
    err << "build: " << e.what() << "\n";
    return kExitIo;
  }
  try {
    if (opt.epsilon <= 0.0) {
      err << "build: --eps must be positive\n";
      return kExitUsage;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const SchemeFile file = build_scheme_file(
        sites, opt.epsilon, opt.c_override, opt.alpha, opt.dense_threshold);
    const auto t1 = std::chrono::steady_clock::now();
    if (file.components.size() > 1) {
      err << "build: instance has " << file.components.size()
          << " components; routing across them will fail\n";
    }
    if (opt.out.empty()) {
      err << "build: --out is required\n";
      return kExitUsage;
    }
    write_scheme_file(opt.out, file);

    json comps = json::array();
    for (const SchemeComponent& c : file.components) {
      json jc;
      jc["mode"] = c.mode();
      jc["n"] = c.sites.size();
      if (const auto* s = std::get_if<RoutingScheme>(&c.payload)) {
        jc["c"] = s->c;
        jc["diameter"] = s->diameter;
        jc["pair_count"] = s->stats.pair_count;
        jc["max_table_bits"] = s->stats.max_table_bits;
        jc["max_label_bits"] = s->stats.label_bits;
      } else if (const auto* e = std::get_if<ExtendedScheme>(&c.payload)) {
        jc["eps1"] = e->epsilon1;
        jc["net_size"] = e->nets.net.size();
        jc["z_size"] = e->nets.z.size();
        if (!e->uses_next_hop()) {
          const auto& inner = std::get<RoutingScheme>(e->inner);
          jc["c"] = inner.c;
          jc["pair_count"] = inner.stats.pair_count;
          jc["max_table_bits"] = inner.stats.max_table_bits;
        }
      }
      comps.push_back(std::move(jc));
    }
    json j;
    j["instance_hash"] = file.instance_hash;
    j["n"] = sites.size();
    j["density_upper_bound"] = density_upper_bound(sites);
    j["components"] = std::move(comps);
    j["preprocess_ms"] =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    j["out"] = opt.out;
    out << j.dump(2) << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "build: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_route(const RouteOptions& opt, std::ostream& out, std::ostream& err) {
  SchemeFile file;
  std::vector<Site> sites;
  try {
    file = read_scheme_file(opt.scheme);
    sites = load_instance_or_throw(opt.instance);
  } catch (const Error& e) {
    err << "route: " << e.what() << "\n";
    return kExitIo;
  }
  if (instance_hash(sites) != file.instance_hash) {
    err << "route: scheme was built for a different instance (hash "
        << file.instance_hash << " vs " << instance_hash(sites) << ")\n";
    return kExitIo;
  }
  try {
    const auto pairs = expand_pair_spec(opt.pairs, sites, opt.seed);
    const auto t0 = std::chrono::steady_clock::now();
    const RouteReport report =
        route_pairs(file, sites, pairs, opt.step_limit);
    const auto t1 = std::chrono::steady_clock::now();

    const std::string rows = opt.format == "json"
                                 ? format_report_json(report)
                                 : format_report_csv(report);
    if (opt.out.empty()) {
      out << rows;
    } else {
      write_text(opt.out, rows);
    }

    double max_c = 0.0;
    std::int64_t pair_count = 0, max_table_bits = 0;
    int max_label_bits = 0;
    double max_diam = 0.0;
    for (const SchemeComponent& c : file.components) {
      const RoutingScheme* s = std::get_if<RoutingScheme>(&c.payload);
      if (const auto* e = std::get_if<ExtendedScheme>(&c.payload)) {
        if (!e->uses_next_hop()) s = &std::get<RoutingScheme>(e->inner);
      }
      if (s != nullptr) {
        max_c = std::max(max_c, s->c);
        max_diam = std::max(max_diam, s->diameter);
        pair_count += s->stats.pair_count;
        max_table_bits = std::max(max_table_bits, s->stats.max_table_bits);
        max_label_bits = std::max(max_label_bits, s->stats.label_bits);
      }
    }
    json j;
    j["instance_hash"] = file.instance_hash;
    j["n"] = sites.size();
    j["diameter"] = max_diam;
    j["density_upper_bound"] = density_upper_bound(sites);
    j["c"] = max_c;
    j["pair_count"] = pair_count;
    j["max_stretch"] = report.summary.max_ratio;
    j["mean_stretch"] = report.summary.mean_ratio;
    j["max_table_bits"] = max_table_bits;
    j["max_label_bits"] = max_label_bits;
    j["max_header_bits"] = report.summary.max_header_bits;
    j["routed_pairs"] = report.summary.pair_count;
    j["routing_ms"] =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    out << j.dump(2) << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "route: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out,
               std::ostream& err) {
  std::vector<Site> sites;
  try {
    sites = load_instance_or_throw(opt.instance);
  } catch (const Error& e) {
    err << "verify: " << e.what() << "\n";
    return kExitIo;
  }
  if (sites.size() > 300) {
    err << "verify: exhaustive suites are limited to n <= 300\n";
    return kExitUsage;
  }
  try {
    const AuditReport report =
        run_verify_suite(sites, opt.epsilon, opt.c_override, opt.alpha);
    for (const AuditResult& r : report.results) {
      out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
      if (!r.detail.empty()) out << ": " << r.detail;
      out << "\n";
    }
    if (!report.all_pass()) {
      err << "verify: invariant failures detected\n";
      return kExitInvariant;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "verify: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace diskroute
