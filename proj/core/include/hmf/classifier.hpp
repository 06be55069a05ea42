#pragma once

#include "hmf/decompose.hpp"
#include "hmf/freudenthal.hpp"
#include "hmf/pairs.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hmf {

struct ClassifierOptions {
  std::int64_t dimension_cap = kDefaultDimensionCap;
  int jobs = 1;
};

// tau|_M as (finite labels, M-highest weight) -> multiplicity, after the
// type A lattice identification.
SectoredMultiset m_decomposition(const HermitianPair& pair, const KRepresentation& tau,
                                 std::int64_t dimension_cap = kDefaultDimensionCap);

struct MfResult {
  bool multiplicity_free = true;
  std::optional<Witness> witness;
  std::int64_t dimension = 0;
};

MfResult mf_check(const HermitianPair& pair, const KRepresentation& tau,
                  std::int64_t dimension_cap = kDefaultDimensionCap);

// Valid representatives modulo characters of K, in a fixed order. Classical
// families bound every doubled coordinate by `bound` in absolute value;
// E6 and E7 bound the sum of fundamental-weight coefficients of the
// semisimple part.
std::vector<KRepresentation> enumerate_dominant(const HermitianPair& pair, int bound);

struct Disagreement {
  KRepresentation tau;
  bool verdict = false;
  bool expected = false;
  std::optional<Witness> witness;
};

struct ClassifyReport {
  HermitianPair pair;
  int bound = 0;
  std::size_t total = 0;
  std::size_t agree = 0;
  std::vector<Disagreement> disagreements;
};

// Verdicts are merged in enumeration order whatever the job count.
ClassifyReport classify_range(const HermitianPair& pair, int bound, const ClassifierOptions& options = {});

// Branching to M through the closed-form rules (types A, C, Cmp, D).
SectoredMultiset closed_form_decomposition(const HermitianPair& pair, const KRepresentation& tau);

// Closed-form route equals the character route.
bool cross_validate(const HermitianPair& pair, const KRepresentation& tau,
                    std::int64_t dimension_cap = kDefaultDimensionCap);

}  // namespace hmf
