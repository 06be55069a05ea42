#pragma once

#include "hmf/character.hpp"
#include "hmf/errors.hpp"
#include "hmf/root_datum.hpp"

#include <cstdint>
#include <map>

namespace hmf {

inline constexpr std::int64_t kDefaultDimensionCap = 200000;

// Weight multiplicities of an irreducible on its dominant weights. The rest
// of the character follows by Weyl invariance.
struct DominantCharacter {
  Weight highest;
  std::int64_t dimension = 0;
  std::map<Weight, std::int64_t> dominant;

  std::int64_t multiplicity_of_dominant(const Weight& w) const {
    auto it = dominant.find(w);
    return it == dominant.end() ? 0 : it->second;
  }
};

// Freudenthal's recursion over dominant weights, in exact integer
// arithmetic. Throws ResourceError (carrying the dimension) above the cap.
DominantCharacter freudenthal_dominant(const RootDatum& datum, const Weight& lambda,
                                       std::int64_t cap = kDefaultDimensionCap);

FormalCharacter freudenthal_character(const RootDatum& datum, const Weight& lambda,
                                      std::int64_t cap = kDefaultDimensionCap);

// Expands a dominant table orbit by orbit; fn(weight, multiplicity) is
// called once per weight. Checks that the multiplicities add up to the
// Weyl dimension.
template <class Fn>
void for_each_weight(const RootDatum& datum, const DominantCharacter& ch, Fn&& fn) {
  std::int64_t total = 0;
  for (const auto& [mu, m] : ch.dominant) {
    for_each_orbit_element(datum, mu, [&](const Weight& w) {
      fn(w, m);
      total += m;
    });
  }
  if (total != ch.dimension)
    throw Error("weight multiplicities of " + format_scaled(ch.highest) + " add up to " + std::to_string(total) +
                " instead of the Weyl dimension " + std::to_string(ch.dimension));
}

}  // namespace hmf
