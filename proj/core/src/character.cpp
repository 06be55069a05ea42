#include "hmf/character.hpp"

#include "hmf/errors.hpp"

namespace hmf {

void FormalCharacter::add(const Weight& w, std::int64_t m) {
  if (static_cast<int>(w.size()) != ambient_dim_)
    throw ShapeError("weight length " + std::to_string(w.size()) + " does not match character dimension " +
                     std::to_string(ambient_dim_));
  if (m == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (m < 0) throw NotACharacterError("negative multiplicity at " + format_scaled(w));
    terms_.emplace(w, m);
    return;
  }
  it->second += m;
  if (it->second < 0) throw NotACharacterError("negative multiplicity at " + format_scaled(w));
  if (it->second == 0) terms_.erase(it);
}

std::int64_t FormalCharacter::multiplicity(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t FormalCharacter::total() const {
  std::int64_t t = 0;
  for (const auto& [w, m] : terms_) t += m;
  return t;
}

FormalCharacter trivial_character(int ambient_dim) {
  FormalCharacter c(ambient_dim);
  c.add(Weight(static_cast<std::size_t>(ambient_dim), 0), 1);
  return c;
}

FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw ShapeError("tensor of characters with different dimensions");
  FormalCharacter out(a.ambient_dim());
  for (const auto& [wa, ma] : a.terms())
    for (const auto& [wb, mb] : b.terms()) out.add(add(wa, wb), ma * mb);
  return out;
}

}  // namespace hmf
