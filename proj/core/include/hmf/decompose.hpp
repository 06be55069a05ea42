#pragma once

#include "hmf/character.hpp"
#include "hmf/restriction.hpp"
#include "hmf/root_datum.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

namespace hmf {

// Highest weight -> multiplicity.
class BranchingMultiset {
 public:
  void add(const Weight& highest, std::int64_t m);
  std::int64_t multiplicity(const Weight& highest) const;
  std::size_t size() const { return entries_.size(); }
  std::int64_t max_multiplicity() const;
  const std::map<Weight, std::int64_t>& entries() const { return entries_; }
  bool operator==(const BranchingMultiset& o) const { return entries_ == o.entries_; }

 private:
  std::map<Weight, std::int64_t> entries_;
};

// Greedy peeling: repeatedly take the largest remaining weight (rho-height,
// then lexicographic), require it to be dominant, and subtract that many
// copies of its irreducible character. Throws NotACharacterError otherwise.
BranchingMultiset decompose(const RootDatum& datum, const FormalCharacter& ch);

// Rebuilds sum mult * character(lambda); used to audit decompositions.
FormalCharacter reconstruct(const RootDatum& datum, const BranchingMultiset& bm);

// (sector labels, highest weight) -> multiplicity
using SectoredMultiset = std::map<std::pair<SectorKey, Weight>, std::int64_t>;

SectoredMultiset decompose_sectors(const RootDatum& datum, const SectoredCharacter& sc);

// hw ~ hw + k * generator for all integers k; the canonical representative
// has its pivot coordinate in [0, generator[pivot]).
struct LatticeIdentification {
  Weight generator;
  std::size_t pivot = 0;

  Weight canonical(const Weight& hw) const;
};

SectoredMultiset identify(const SectoredMultiset& sm, const LatticeIdentification& rel);

struct Witness {
  SectorKey sector;
  Weight highest;
  std::int64_t multiplicity = 0;
};

struct MfVerdict {
  bool multiplicity_free = true;
  std::optional<Witness> witness;
};

// The witness is the first offending entry in sorted order.
MfVerdict mf_verdict(const SectoredMultiset& sm);
MfVerdict mf_verdict(const SectoredCharacter& sc, const RootDatum& datum);

}  // namespace hmf
