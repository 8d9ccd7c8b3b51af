#include "diskroute/scheme_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "diskroute/error.hpp"

namespace diskroute {

namespace {

using nlohmann::json;

json to_json(const RoutingScheme& s) {
  json j;
  j["n"] = s.n;
  j["c"] = s.c;
  j["epsilon"] = s.epsilon;
  j["alpha"] = s.alpha;
  j["diameter"] = s.diameter;
  j["height"] = s.height;
  j["site_label"] = s.site_label;
  json local = json::array();
  for (const LocalTable& lt : s.local) {
    json t;
    t["tn"] = json::array();
    for (auto [label, level] : lt.tree_neighbors)
      t["tn"].push_back({label, level});
    t["ud"] = lt.ud_neighbors;
    t["depth"] = lt.own_depth;
    local.push_back(std::move(t));
  }
  j["local"] = std::move(local);
  json global = json::array();
  for (const auto& entries : s.global) {
    json row = json::array();
    for (const GlobalEntry& e : entries) row.push_back({e.lo, e.hi, e.middle});
    global.push_back(std::move(row));
  }
  j["global"] = std::move(global);
  j["stats"] = {{"label_bits", s.stats.label_bits},
                {"level_bits", s.stats.level_bits},
                {"max_local_bits", s.stats.max_local_bits},
                {"max_global_bits", s.stats.max_global_bits},
                {"max_table_bits", s.stats.max_table_bits},
                {"total_table_bits", s.stats.total_table_bits},
                {"pair_count", s.stats.pair_count}};
  return j;
}

RoutingScheme scheme_from_json(const json& j) {
  RoutingScheme s;
  s.n = j.at("n").get<int>();
  s.c = j.at("c").get<double>();
  s.epsilon = j.at("epsilon").get<double>();
  s.alpha = j.at("alpha").get<double>();
  s.diameter = j.at("diameter").get<double>();
  s.height = j.at("height").get<int>();
  s.site_label = j.at("site_label").get<std::vector<Label>>();
  if (s.n < 1 || static_cast<int>(s.site_label.size()) != s.n)
    throw Error("scheme file: site_label size disagrees with n");
  s.label_site.assign(s.n + 1, -1);
  for (int v = 0; v < s.n; ++v) {
    const Label l = s.site_label[v];
    if (l < 1 || l > s.n || s.label_site[l] != -1)
      throw Error("scheme file: labels are not a permutation of 1..n");
    s.label_site[l] = v;
  }
  for (const json& t : j.at("local")) {
    LocalTable lt;
    for (const json& e : t.at("tn"))
      lt.tree_neighbors.push_back({e.at(0).get<Label>(), e.at(1).get<int>()});
    lt.ud_neighbors = t.at("ud").get<std::vector<Label>>();
    lt.own_depth = t.at("depth").get<int>();
    s.local.push_back(std::move(lt));
  }
  for (const json& row : j.at("global")) {
    std::vector<GlobalEntry> entries;
    for (const json& e : row) {
      entries.push_back({e.at(0).get<Label>(), e.at(1).get<Label>(),
                         e.at(2).get<Label>()});
    }
    s.global.push_back(std::move(entries));
  }
  const json& st = j.at("stats");
  s.stats.label_bits = st.at("label_bits").get<int>();
  s.stats.level_bits = st.at("level_bits").get<int>();
  s.stats.max_local_bits = st.at("max_local_bits").get<std::int64_t>();
  s.stats.max_global_bits = st.at("max_global_bits").get<std::int64_t>();
  s.stats.max_table_bits = st.at("max_table_bits").get<std::int64_t>();
  s.stats.total_table_bits = st.at("total_table_bits").get<std::int64_t>();
  s.stats.pair_count = st.at("pair_count").get<std::int64_t>();
  return s;
}

json to_json(const NextHopTable& t) {
  json j;
  j["n"] = t.n;
  j["next"] = t.next;
  return j;
}

NextHopTable next_hop_from_json(const json& j) {
  NextHopTable t;
  t.n = j.at("n").get<int>();
  t.next = j.at("next").get<std::vector<std::vector<SiteId>>>();
  return t;
}

json to_json(const ExtendedScheme& e) {
  json j;
  j["epsilon"] = e.epsilon;
  j["epsilon1"] = e.epsilon1;
  j["net"] = e.nets.net;
  json bridges = json::array();
  for (const Bridge& b : e.nets.bridges)
    bridges.push_back({b.s, b.t, b.p, b.q});
  j["bridges"] = std::move(bridges);
  j["z"] = e.nets.z;
  json pos = json::array();
  for (const Site& s : e.z_graph.sites) pos.push_back({s.pos.x, s.pos.y});
  j["z_pos"] = std::move(pos);
  j["closest_net"] = e.closest_net;
  if (e.uses_next_hop()) {
    j["inner_mode"] = "next-hop";
    j["inner"] = to_json(std::get<NextHopTable>(e.inner));
  } else {
    j["inner_mode"] = "scheme";
    j["inner"] = to_json(std::get<RoutingScheme>(e.inner));
  }
  return j;
}

ExtendedScheme extended_from_json(const json& j) {
  ExtendedScheme e;
  e.epsilon = j.at("epsilon").get<double>();
  e.epsilon1 = j.at("epsilon1").get<double>();
  e.nets.eps1 = e.epsilon1;
  e.nets.net = j.at("net").get<std::vector<SiteId>>();
  for (const json& b : j.at("bridges")) {
    e.nets.bridges.push_back({b.at(0).get<SiteId>(), b.at(1).get<SiteId>(),
                              b.at(2).get<SiteId>(), b.at(3).get<SiteId>()});
  }
  e.nets.z = j.at("z").get<std::vector<SiteId>>();
  e.z_sites = e.nets.z;
  e.closest_net = j.at("closest_net").get<std::vector<SiteId>>();
  const int n = static_cast<int>(e.closest_net.size());
  e.inner_index.assign(n, -1);
  std::vector<Site> z_sites;
  const json& pos = j.at("z_pos");
  if (pos.size() != e.z_sites.size())
    throw Error("scheme file: z_pos size disagrees with z");
  for (std::size_t i = 0; i < e.z_sites.size(); ++i) {
    const SiteId z = e.z_sites[i];
    if (z < 0 || z >= n) throw Error("scheme file: z site out of range");
    e.inner_index[z] = static_cast<int>(i);
    z_sites.push_back({static_cast<SiteId>(i),
                       {pos.at(i).at(0).get<double>(),
                        pos.at(i).at(1).get<double>()}});
  }
  for (SiteId c : e.closest_net) {
    if (c < 0 || c >= n || e.inner_index[c] < 0)
      throw Error("scheme file: closest_net entry is not a Z site");
  }
  e.z_graph = build_udg(z_sites);
  if (j.at("inner_mode").get<std::string>() == "next-hop") {
    e.inner = next_hop_from_json(j.at("inner"));
  } else {
    e.inner = scheme_from_json(j.at("inner"));
  }
  return e;
}

}  // namespace

const char* SchemeComponent::mode() const {
  if (std::holds_alternative<RoutingScheme>(payload)) return "plain";
  if (std::holds_alternative<ExtendedScheme>(payload)) return "extended";
  return "direct";
}

std::string serialize_scheme(const SchemeFile& file) {
  json j;
  j["version"] = file.version;
  j["instance_hash"] = file.instance_hash;
  j["epsilon"] = file.epsilon;
  j["alpha"] = file.alpha;
  json comps = json::array();
  for (const SchemeComponent& c : file.components) {
    json jc;
    jc["mode"] = c.mode();
    jc["sites"] = c.sites;
    if (const auto* s = std::get_if<RoutingScheme>(&c.payload)) {
      jc["scheme"] = to_json(*s);
    } else if (const auto* e = std::get_if<ExtendedScheme>(&c.payload)) {
      jc["extended"] = to_json(*e);
    } else {
      jc["direct"] = to_json(std::get<NextHopTable>(c.payload));
    }
    comps.push_back(std::move(jc));
  }
  j["components"] = std::move(comps);
  return j.dump(2) + "\n";
}

SchemeFile deserialize_scheme(const std::string& text) {
  json j = json::parse(text);
  SchemeFile file;
  file.version = j.at("version").get<int>();
  if (file.version != 1)
    throw Error("deserialize_scheme: unsupported version " +
                std::to_string(file.version));
  file.instance_hash = j.at("instance_hash").get<std::string>();
  file.epsilon = j.at("epsilon").get<double>();
  file.alpha = j.at("alpha").get<double>();
  for (const json& jc : j.at("components")) {
    SchemeComponent c;
    c.sites = jc.at("sites").get<std::vector<SiteId>>();
    const std::string mode = jc.at("mode").get<std::string>();
    if (mode == "plain") {
      c.payload = scheme_from_json(jc.at("scheme"));
    } else if (mode == "extended") {
      c.payload = extended_from_json(jc.at("extended"));
    } else if (mode == "direct") {
      c.payload = next_hop_from_json(jc.at("direct"));
    } else {
      throw Error("deserialize_scheme: unknown component mode " + mode);
    }
    file.components.push_back(std::move(c));
  }
  return file;
}

void write_scheme_file(const std::string& path, const SchemeFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  out << serialize_scheme(file);
}

SchemeFile read_scheme_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize_scheme(buf.str());
}

}  // namespace diskroute
