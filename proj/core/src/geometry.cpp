#include "diskroute/geometry.hpp"

#include <algorithm>

namespace diskroute {

UniformGrid::UniformGrid(const std::vector<Site>& sites, double cell_width)
    : sites_(&sites), width_(cell_width) {
  for (const Site& s : sites) {
    cells_[key(cell_of(s.pos.x), cell_of(s.pos.y))].push_back(s.id);
  }
}

std::vector<SiteId> UniformGrid::sites_within(const Point& center,
                                              double radius) const {
  std::vector<SiteId> out;
  const std::int64_t cx = cell_of(center.x);
  const std::int64_t cy = cell_of(center.y);
  const std::int64_t rings =
      static_cast<std::int64_t>(std::ceil(radius / width_)) + 1;
  for (std::int64_t dx = -rings; dx <= rings; ++dx) {
    for (std::int64_t dy = -rings; dy <= rings; ++dy) {
      auto it = cells_.find(key(cx + dx, cy + dy));
      if (it == cells_.end()) continue;
      for (SiteId id : it->second) {
        if (dist((*sites_)[id].pos, center) <= radius) out.push_back(id);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace diskroute
