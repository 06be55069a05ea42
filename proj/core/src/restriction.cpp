#include "hmf/restriction.hpp"

#include "hmf/errors.hpp"

#include <numeric>
#include <unordered_map>

namespace hmf {

TorusMap TorusMap::identity(int n) {
  TorusMap m;
  m.source_dim = n;
  m.target_dim = n;
  m.matrix.assign(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

TorusMap TorusMap::direct_sum(const TorusMap& a, const TorusMap& b) {
  TorusMap m;
  m.source_dim = a.source_dim + b.source_dim;
  m.target_dim = a.target_dim + b.target_dim;
  m.denominator = std::lcm(a.denominator, b.denominator);
  const std::int64_t fa = m.denominator / a.denominator;
  const std::int64_t fb = m.denominator / b.denominator;
  for (const auto& row : a.matrix) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(m.source_dim), 0);
    for (std::size_t j = 0; j < row.size(); ++j) r[j] = row[j] * fa;
    m.matrix.push_back(std::move(r));
  }
  for (const auto& row : b.matrix) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(m.source_dim), 0);
    for (std::size_t j = 0; j < row.size(); ++j) r[static_cast<std::size_t>(a.source_dim) + j] = row[j] * fb;
    m.matrix.push_back(std::move(r));
  }
  return m;
}

Weight TorusMap::apply(const Weight& w) const {
  if (static_cast<int>(w.size()) != source_dim)
    throw ShapeError("torus map expects " + std::to_string(source_dim) + " coordinates, got " +
                     std::to_string(w.size()));
  Weight out;
  out.reserve(static_cast<std::size_t>(target_dim));
  for (const auto& row : matrix) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * w[j];
    if (s % denominator != 0)
      throw EmbeddingError("torus map image of " + format_scaled(w) + " is not integral");
    out.push_back(static_cast<Coord>(s / denominator));
  }
  return out;
}

FiniteLabel LabelFunctional::evaluate(const Weight& w) const {
  if (w.size() != coeffs.size()) throw ShapeError("label functional length mismatch");
  std::int64_t s = offset;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * w[i];
  if (s % denominator != 0) throw EmbeddingError("finite label of " + format_scaled(w) + " is not integral");
  s /= denominator;
  int v = static_cast<int>(((s % modulus) + modulus) % modulus);
  return FiniteLabel{modulus, v};
}

std::int64_t SectoredCharacter::total() const {
  std::int64_t t = 0;
  for (const auto& [k, ch] : sectors) t += ch.total();
  return t;
}

namespace {

std::vector<int> moduli_of(const std::vector<LabelFunctional>& labels) {
  std::vector<int> m;
  for (const auto& l : labels) m.push_back(l.modulus);
  return m;
}

SectorKey key_of(const Weight& w, const std::vector<LabelFunctional>& labels) {
  SectorKey k;
  k.reserve(labels.size());
  for (const auto& l : labels) k.push_back(l.evaluate(w).value);
  return k;
}

}  // namespace

SectoredCharacter restrict_character(const FormalCharacter& src, const TorusMap& map,
                                     const std::vector<LabelFunctional>& labels) {
  if (src.ambient_dim() != map.source_dim) throw ShapeError("torus map domain does not match the character");
  SectoredCharacter out;
  out.ambient_dim = map.target_dim;
  out.moduli = moduli_of(labels);
  for (const auto& [w, m] : src.terms()) {
    SectorKey key = key_of(w, labels);
    auto it = out.sectors.try_emplace(std::move(key), map.target_dim).first;
    it->second.add(map.apply(w), m);
  }
  if (out.total() != src.total()) throw Error("restriction changed the total multiplicity");
  return out;
}

SectoredCharacter restrict_character(const RootDatum& datum, const DominantCharacter& src, const TorusMap& map,
                                     const std::vector<LabelFunctional>& labels) {
  if (datum.dim() != map.source_dim) throw ShapeError("torus map domain does not match the datum");
  std::map<SectorKey, std::unordered_map<Weight, std::int64_t, WeightHash>> acc;
  std::int64_t total = 0;
  for_each_weight(datum, src, [&](const Weight& w, std::int64_t m) {
    acc[key_of(w, labels)][map.apply(w)] += m;
    total += m;
  });
  SectoredCharacter out;
  out.ambient_dim = map.target_dim;
  out.moduli = moduli_of(labels);
  for (auto& [key, terms] : acc) {
    FormalCharacter ch(map.target_dim);
    for (const auto& [w, m] : terms) ch.add(w, m);
    out.sectors.emplace(key, std::move(ch));
  }
  if (out.total() != total || total != src.dimension) throw Error("restriction changed the total multiplicity");
  return out;
}

std::string format_sector(const SectorKey& key) {
  std::string s = "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(key[i]);
  }
  return s + ")";
}

}  // namespace hmf
