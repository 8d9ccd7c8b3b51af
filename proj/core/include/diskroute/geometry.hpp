#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace diskroute {

using SiteId = std::int32_t;
using Label = std::int32_t;  // postorder labels are 1..n, 0 means "none"

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

inline double dist(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

/// A site of the input point set. Ids are dense, 0..n-1.
struct Site {
  SiteId id = 0;
  Point pos;

  bool operator==(const Site&) const = default;
};

inline double dist(const Site& a, const Site& b) { return dist(a.pos, b.pos); }

/// Uniform grid over the plane used for disk-range queries. Cell width is
/// fixed at construction; cells are addressed by floor(x/w), floor(y/w).
class UniformGrid {
 public:
  UniformGrid(const std::vector<Site>& sites, double cell_width);

  /// Ids of all sites within (closed) distance `radius` of `center`,
  /// in increasing id order.
  std::vector<SiteId> sites_within(const Point& center, double radius) const;

  /// Occupied cells and their site counts.
  const std::unordered_map<std::uint64_t, std::vector<SiteId>>& cells() const {
    return cells_;
  }

  double cell_width() const { return width_; }

  static std::uint64_t key(std::int64_t cx, std::int64_t cy) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(cx)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(cy));
  }

  std::int64_t cell_of(double coord) const {
    return static_cast<std::int64_t>(std::floor(coord / width_));
  }

 private:
  const std::vector<Site>* sites_;
  double width_;
  std::unordered_map<std::uint64_t, std::vector<SiteId>> cells_;
};

}  // namespace diskroute
