#pragma once

#include <stdexcept>
#include <string>

namespace diskroute {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace diskroute
