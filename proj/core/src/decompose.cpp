#include "hmf/decompose.hpp"

#include "hmf/errors.hpp"
#include "hmf/freudenthal.hpp"

#include <algorithm>
#include <limits>

namespace hmf {

void BranchingMultiset::add(const Weight& highest, std::int64_t m) {
  if (m == 0) return;
  auto& v = entries_[highest];
  v += m;
  if (v < 0) throw NotACharacterError("negative constituent multiplicity");
  if (v == 0) entries_.erase(highest);
}

std::int64_t BranchingMultiset::multiplicity(const Weight& highest) const {
  auto it = entries_.find(highest);
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t BranchingMultiset::max_multiplicity() const {
  std::int64_t best = 0;
  for (const auto& [w, m] : entries_) best = std::max(best, m);
  return best;
}

namespace {

struct HeightOrder {
  const Weight* rho;
  bool operator()(const Weight& a, const Weight& b) const {
    const auto ha = dot(a, *rho);
    const auto hb = dot(b, *rho);
    if (ha != hb) return ha > hb;
    return a > b;
  }
};

}  // namespace

BranchingMultiset decompose(const RootDatum& datum, const FormalCharacter& ch) {
  if (ch.ambient_dim() != datum.dim())
    throw ShapeError("character dimension " + std::to_string(ch.ambient_dim()) + " does not match datum " +
                     datum.name());
  std::map<Weight, std::int64_t, HeightOrder> remaining(HeightOrder{&datum.rho()});
  for (const auto& [w, m] : ch.terms()) remaining.emplace(w, m);
  // A constituent cannot be larger than the whole character.
  const std::int64_t cap = std::max(ch.total(), kDefaultDimensionCap);

  BranchingMultiset out;
  while (!remaining.empty()) {
    const Weight top = remaining.begin()->first;
    const std::int64_t m = remaining.begin()->second;
    if (!is_dominant(datum, top))
      throw NotACharacterError("maximal remaining weight " + format_scaled(top) + " is not dominant for " +
                               datum.name());
    const DominantCharacter irr = freudenthal_dominant(datum, top, cap);
    for_each_weight(datum, irr, [&](const Weight& w, std::int64_t k) {
      auto it = remaining.find(w);
      const std::int64_t have = it == remaining.end() ? 0 : it->second;
      const std::int64_t left = have - m * k;
      if (left < 0)
        throw NotACharacterError("subtracting " + format_scaled(top) + " makes the multiplicity of " +
                                 format_scaled(w) + " negative");
      if (left == 0)
        remaining.erase(it);
      else
        it->second = left;
    });
    out.add(top, m);
  }
  return out;
}

FormalCharacter reconstruct(const RootDatum& datum, const BranchingMultiset& bm) {
  FormalCharacter out(datum.dim());
  for (const auto& [hw, m] : bm.entries()) {
    const DominantCharacter irr = freudenthal_dominant(datum, hw, std::numeric_limits<std::int64_t>::max());
    for_each_weight(datum, irr, [&](const Weight& w, std::int64_t k) { out.add(w, m * k); });
  }
  return out;
}

SectoredMultiset decompose_sectors(const RootDatum& datum, const SectoredCharacter& sc) {
  SectoredMultiset out;
  for (const auto& [key, ch] : sc.sectors) {
    const BranchingMultiset bm = decompose(datum, ch);
    for (const auto& [hw, m] : bm.entries()) out[{key, hw}] += m;
  }
  return out;
}

Weight LatticeIdentification::canonical(const Weight& hw) const {
  if (hw.size() != generator.size()) throw ShapeError("identification generator length mismatch");
  const std::int64_t g = generator[pivot];
  if (g <= 0) throw ShapeError("identification pivot must be positive");
  const std::int64_t x = hw[pivot];
  const std::int64_t k = (x >= 0) ? x / g : -((-x + g - 1) / g);
  return sub(hw, mul(k, generator));
}

SectoredMultiset identify(const SectoredMultiset& sm, const LatticeIdentification& rel) {
  SectoredMultiset out;
  for (const auto& [key, m] : sm) out[{key.first, rel.canonical(key.second)}] += m;
  return out;
}

MfVerdict mf_verdict(const SectoredMultiset& sm) {
  MfVerdict v;
  for (const auto& [key, m] : sm) {
    if (m >= 2) {
      v.multiplicity_free = false;
      v.witness = Witness{key.first, key.second, m};
      return v;
    }
  }
  return v;
}

MfVerdict mf_verdict(const SectoredCharacter& sc, const RootDatum& datum) {
  return mf_verdict(decompose_sectors(datum, sc));
}

}  // namespace hmf
