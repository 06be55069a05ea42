#pragma once

#include "hmf/weight.hpp"

#include <cstdint>
#include <map>

namespace hmf {

// A finite weight multiset. Keys are kept sorted so iteration, printing and
// witness selection are deterministic. Zero entries are never stored.
class FormalCharacter {
 public:
  explicit FormalCharacter(int ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  // Adds m (which may be negative) to the multiplicity of w. Throws
  // NotACharacterError if a multiplicity would become negative.
  void add(const Weight& w, std::int64_t m);

  std::int64_t multiplicity(const Weight& w) const;
  std::int64_t total() const;
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  int ambient_dim() const { return ambient_dim_; }
  const std::map<Weight, std::int64_t>& terms() const { return terms_; }

  bool operator==(const FormalCharacter& other) const {
    return ambient_dim_ == other.ambient_dim_ && terms_ == other.terms_;
  }

 private:
  int ambient_dim_;
  std::map<Weight, std::int64_t> terms_;
};

FormalCharacter trivial_character(int ambient_dim);

FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b);

}  // namespace hmf
