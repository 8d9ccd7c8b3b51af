#pragma once

#include <string>
#include <variant>
#include <vector>

#include "diskroute/density_net.hpp"

namespace diskroute {

/// One connected component of the instance together with its scheme.
/// `sites` are original instance ids in increasing order; the payload's
/// internal ids are positions in that list.
struct SchemeComponent {
  std::vector<SiteId> sites;
  std::variant<RoutingScheme, ExtendedScheme, NextHopTable> payload;

  const char* mode() const;
  bool operator==(const SchemeComponent&) const = default;
};

/// Versioned on-disk container. Serialization is canonical JSON: a rebuild
/// from the same inputs is byte-identical, and serialize/deserialize is an
/// identity round trip.
struct SchemeFile {
  int version = 1;
  std::string instance_hash;
  double epsilon = 0.0;
  double alpha = 200.0;
  std::vector<SchemeComponent> components;

  bool operator==(const SchemeFile&) const = default;
};

std::string serialize_scheme(const SchemeFile& file);
SchemeFile deserialize_scheme(const std::string& text);

void write_scheme_file(const std::string& path, const SchemeFile& file);
SchemeFile read_scheme_file(const std::string& path);

}  // namespace diskroute
