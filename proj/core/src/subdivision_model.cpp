#include "twd/subdivision_model.hpp"

#include <algorithm>
#include <set>

namespace twd {

int SubdivisionModel::max_internal() const {
  int best = 0;
  for (const auto& p : paths) {
    best = std::max(best, static_cast<int>(p.size()) - 2);
  }
  return best;
}

bool SubdivisionModel::proper() const {
  return std::all_of(paths.begin(), paths.end(),
                     [](const auto& p) { return p.size() >= 3; });
}

std::vector<Vertex> SubdivisionModel::vertices() const {
  std::vector<Vertex> out(branch.begin(), branch.end());
  std::set<Vertex> seen(branch.begin(), branch.end());
  for (const auto& p : paths) {
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (seen.insert(p[i]).second) out.push_back(p[i]);
    }
  }
  return out;
}

}  // namespace twd
