#pragma once

#include "hmf/character.hpp"
#include "hmf/freudenthal.hpp"
#include "hmf/root_datum.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hmf {

// Rational linear map matrix/denominator between scaled coordinate spaces.
// Rows index target coordinates.
struct TorusMap {
  int source_dim = 0;
  int target_dim = 0;
  std::vector<std::vector<std::int64_t>> matrix;
  std::int64_t denominator = 1;

  static TorusMap identity(int n);
  // Block-diagonal placement of two maps.
  static TorusMap direct_sum(const TorusMap& a, const TorusMap& b);

  // Throws EmbeddingError if an image coordinate is not an integer.
  Weight apply(const Weight& w) const;
};

struct FiniteLabel {
  int modulus = 1;
  int value = 0;
};

// w -> ((coeffs . w + offset) / denominator) mod modulus, evaluated on
// scaled coordinates. The division must be exact.
struct LabelFunctional {
  std::vector<std::int64_t> coeffs;
  std::int64_t offset = 0;
  std::int64_t denominator = 1;
  int modulus = 1;

  FiniteLabel evaluate(const Weight& w) const;
};

using SectorKey = std::vector<int>;

struct SectoredCharacter {
  int ambient_dim = 0;
  std::vector<int> moduli;
  std::map<SectorKey, FormalCharacter> sectors;

  std::int64_t total() const;
};

SectoredCharacter restrict_character(const FormalCharacter& src, const TorusMap& map,
                                     const std::vector<LabelFunctional>& labels);

// Same result as restricting freudenthal_character(datum, ...), but streams
// the weights orbit by orbit instead of materializing the source character.
SectoredCharacter restrict_character(const RootDatum& datum, const DominantCharacter& src, const TorusMap& map,
                                     const std::vector<LabelFunctional>& labels);

std::string format_sector(const SectorKey& key);

}  // namespace hmf
