#pragma once

#include <algorithm>
#include <vector>

namespace hmf {

template <class Fn>
void for_each_orbit_element(const RootDatum& datum, const Weight& dominant, Fn&& fn) {
  // Within an orbit of a dominant weight, s_i w lies one level deeper than w
  // exactly when <w, alpha_i> > 0, so deduplicating one level at a time is
  // enough.
  const auto& simple = datum.simple_roots();
  const auto& norms = datum.simple_root_norms();
  std::vector<Weight> level{dominant};
  std::vector<Weight> next;
  while (!level.empty()) {
    next.clear();
    for (const Weight& w : level) {
      fn(static_cast<const Weight&>(w));
      for (std::size_t i = 0; i < simple.size(); ++i) {
        if (dot(w, simple[i]) > 0) next.push_back(reflect(w, simple[i], norms[i]));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level.swap(next);
  }
}

}  // namespace hmf
