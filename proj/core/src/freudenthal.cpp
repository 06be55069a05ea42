#include "hmf/freudenthal.hpp"

#include "hmf/errors.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace hmf {

namespace {

std::vector<Weight> dominant_weights_below(const RootDatum& datum, const Weight& lambda) {
  // Dominant weights of V(lambda) are connected to lambda by steps of single
  // positive roots through dominant weights, so a search restricted to
  // dominant weights finds all of them.
  std::unordered_set<Weight, WeightHash> seen{lambda};
  std::deque<Weight> queue{lambda};
  std::vector<Weight> out;
  while (!queue.empty()) {
    Weight mu = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : datum.positive_roots()) {
      Weight nu = sub(mu, a);
      if (!is_dominant(datum, nu) || seen.count(nu)) continue;
      seen.insert(nu);
      queue.push_back(nu);
    }
    out.push_back(std::move(mu));
  }
  const Weight& rho = datum.rho();
  std::sort(out.begin(), out.end(), [&](const Weight& x, const Weight& y) {
    const auto hx = dot(x, rho);
    const auto hy = dot(y, rho);
    if (hx != hy) return hx > hy;
    return x > y;
  });
  return out;
}

}  // namespace

DominantCharacter freudenthal_dominant(const RootDatum& datum, const Weight& lambda, std::int64_t cap) {
  if (!is_dominant(datum, lambda))
    throw ShapeError("highest weight " + format_scaled(lambda) + " is not dominant for " + datum.name());
  DominantCharacter ch;
  ch.highest = lambda;
  ch.dimension = weyl_dim(datum, lambda);
  if (ch.dimension > cap)
    throw ResourceError("representation " + format_plain(lambda, datum.scale()) + " of " + datum.name() +
                            " has dimension " + std::to_string(ch.dimension) + " above the cap " +
                            std::to_string(cap),
                        ch.dimension);

  const std::vector<Weight> order = dominant_weights_below(datum, lambda);
  const Weight& rho = datum.rho();
  const Weight lr = add(lambda, rho);
  const std::int64_t top = dot(lr, lr);

  std::unordered_map<Weight, std::int64_t, WeightHash> mult;
  mult.reserve(order.size() * 2);
  mult[lambda] = 1;
  auto lookup = [&](const Weight& w) -> std::int64_t {
    auto it = mult.find(dominant_representative(datum, w));
    return it == mult.end() ? 0 : it->second;
  };

  for (const Weight& mu : order) {
    if (mu == lambda) continue;
    __int128 num = 0;
    for (const auto& a : datum.positive_roots()) {
      Weight shifted = mu;
      for (;;) {
        shifted = add(shifted, a);
        const std::int64_t m = lookup(shifted);
        if (m == 0) break;
        num += static_cast<__int128>(m) * dot(shifted, a);
      }
    }
    num *= 2;
    const Weight mr = add(mu, rho);
    const std::int64_t den = top - dot(mr, mr);
    if (den <= 0) throw Error("Freudenthal denominator is not positive at " + format_scaled(mu));
    if (num % den != 0) throw Error("Freudenthal division is not exact at " + format_scaled(mu));
    const auto m = static_cast<std::int64_t>(num / den);
    if (m < 0) throw Error("negative Freudenthal multiplicity at " + format_scaled(mu));
    if (m > 0) mult[mu] = m;
  }

  for (const auto& [w, m] : mult) ch.dominant.emplace(w, m);
  return ch;
}

FormalCharacter freudenthal_character(const RootDatum& datum, const Weight& lambda, std::int64_t cap) {
  const DominantCharacter d = freudenthal_dominant(datum, lambda, cap);
  FormalCharacter out(datum.dim());
  for_each_weight(datum, d, [&](const Weight& w, std::int64_t m) { out.add(w, m); });
  return out;
}

}  // namespace hmf
