#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diskroute/geometry.hpp"

namespace diskroute {

/// Instance text format: header line `n`, then n lines `id x y`.
std::string format_instance(const std::vector<Site>& sites);
std::vector<Site> parse_instance(const std::string& text);

void write_instance_file(const std::string& path,
                         const std::vector<Site>& sites);
std::vector<Site> read_instance_file(const std::string& path);

std::uint64_t fnv1a64(const std::string& bytes);

/// Hash of the canonical instance text; ties scheme files to instances.
std::string instance_hash(const std::vector<Site>& sites);

}  // namespace diskroute
