#include "diskroute/instance_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "diskroute/error.hpp"

namespace diskroute {

namespace {

// shortest round-trip decimal form
std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string format_instance(const std::vector<Site>& sites) {
  std::ostringstream os;
  os << sites.size() << '\n';
  for (const Site& s : sites) {
    os << s.id << ' ' << format_double(s.pos.x) << ' '
       << format_double(s.pos.y) << '\n';
  }
  return os.str();
}

std::vector<Site> parse_instance(const std::string& text) {
  std::istringstream is(text);
  std::size_t n = 0;
  if (!(is >> n)) throw Error("parse_instance: missing site count");
  std::vector<Site> sites(n);
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    SiteId id;
    double x, y;
    if (!(is >> id >> x >> y))
      throw Error("parse_instance: truncated at site line " +
                  std::to_string(i));
    if (id < 0 || static_cast<std::size_t>(id) >= n || seen[id])
      throw Error("parse_instance: ids must be unique and in 0..n-1");
    if (!std::isfinite(x) || !std::isfinite(y))
      throw Error("parse_instance: non-finite coordinate for site " +
                  std::to_string(id));
    seen[id] = 1;
    sites[id] = {id, {x, y}};
  }
  return sites;
}

void write_instance_file(const std::string& path,
                         const std::vector<Site>& sites) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  out << format_instance(sites);
}

std::vector<Site> read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string instance_hash(const std::vector<Site>& sites) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(
                    fnv1a64(format_instance(sites))));
  return std::string(buf);
}

}  // namespace diskroute
