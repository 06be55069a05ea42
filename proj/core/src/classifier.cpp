#include "hmf/classifier.hpp"

#include "hmf/branch_rules.hpp"
#include "hmf/errors.hpp"
#include "hmf/restriction.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

namespace hmf {

SectoredMultiset m_decomposition(const HermitianPair& pair, const KRepresentation& tau, std::int64_t dimension_cap) {
  if (!k_rep_valid(pair, tau))
    throw ShapeError(format_scaled(tau.highest) + " is not a valid representation of K for " + pair.name());
  const RootDatum k = k_datum(pair);
  const MModel model = build_m_model(pair);
  const DominantCharacter ch = freudenthal_dominant(k, tau.highest, dimension_cap);
  const SectoredCharacter sc = restrict_character(k, ch, model.torus_map, model.finite_labels);
  SectoredMultiset sm = decompose_sectors(model.reductive, sc);
  if (model.identification) sm = identify(sm, *model.identification);
  return sm;
}

MfResult mf_check(const HermitianPair& pair, const KRepresentation& tau, std::int64_t dimension_cap) {
  const MfVerdict v = mf_verdict(m_decomposition(pair, tau, dimension_cap));
  MfResult r;
  r.multiplicity_free = v.multiplicity_free;
  r.witness = v.witness;
  r.dimension = weyl_dim(k_datum(pair), tau.highest);
  return r;
}

namespace {

// Weakly decreasing sequences of the given length with entries in [lo, hi]
// congruent to `parity` mod 2.
void decreasing(std::size_t len, Coord hi, Coord lo, int parity, const std::function<void(const Weight&)>& fn) {
  Weight w(len, 0);
  std::function<void(std::size_t, Coord)> rec = [&](std::size_t i, Coord top) {
    if (i == len) {
      fn(w);
      return;
    }
    for (Coord v = top; v >= lo; --v) {
      if (((v % 2) + 2) % 2 != parity) continue;
      w[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, hi);
}

// Normalized GL(n) weights: last entry equals `parity`, doubled entries <= bound.
std::vector<Weight> gl_normalized(int n, int bound, int parity) {
  std::vector<Weight> out;
  decreasing(static_cast<std::size_t>(n), static_cast<Coord>(bound), static_cast<Coord>(parity), parity,
             [&](const Weight& w) {
               if (w.back() == parity) out.push_back(w);
             });
  return out;
}

std::vector<Weight> so_dominant(int n, int bound, int parity) {
  const std::size_t k = static_cast<std::size_t>(n / 2);
  std::vector<Weight> out;
  decreasing(k, static_cast<Coord>(bound), 0, parity, [&](const Weight& w) {
    out.push_back(w);
    if (n % 2 == 0 && w.back() != 0) {
      Weight flipped = w;
      flipped.back() = static_cast<Coord>(-flipped.back());
      out.push_back(flipped);
    }
  });
  return out;
}

std::vector<Weight> by_fundamental_coefficients(const RootDatum& d, int bound) {
  const auto& fund = d.fundamental_weights();
  std::vector<Weight> out;
  Weight acc = d.zero();
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == fund.size()) {
      out.push_back(acc);
      return;
    }
    const Weight saved = acc;
    for (int c = 0; c <= left; ++c) {
      rec(i + 1, left - c);
      acc = add(acc, fund[i]);
    }
    acc = saved;
  };
  rec(0, bound);
  return out;
}

}  // namespace

std::vector<KRepresentation> enumerate_dominant(const HermitianPair& pair, int bound) {
  if (bound < 0) throw ShapeError("enumeration bound must be nonnegative");
  std::vector<KRepresentation> out;
  auto emit = [&](const Weight& w) {
    KRepresentation tau{w};
    if (k_rep_valid(pair, tau)) out.push_back(tau);
  };
  switch (pair.family) {
    case Family::A: {
      const int r = pair.n - pair.b;
      for (const auto& mu : gl_normalized(pair.n, bound, 0))
        for (const auto& nu : gl_normalized(r, bound, 0)) emit(concat(mu, nu));
      break;
    }
    case Family::C:
    case Family::D:
      for (const auto& mu : gl_normalized(pair.n, bound, 0)) emit(mu);
      break;
    case Family::Cmp:
      for (int h = 0; h <= 1; ++h)
        for (const auto& mu : gl_normalized(pair.n, bound, h)) emit(mu);
      break;
    case Family::BD:
      for (const auto& mu : so_dominant(pair.n, bound, 0)) emit(concat(mu, make_weight({0})));
      break;
    case Family::BDspin:
      for (int h = 0; h <= 1; ++h)
        for (const auto& mu : so_dominant(pair.n, bound, h)) emit(concat(mu, make_weight({static_cast<Coord>(h)})));
      break;
    case Family::E6:
      for (const auto& mu : by_fundamental_coefficients(RootDatum::type_d(5), bound))
        for (Coord n = 0; n < 4; ++n) emit(concat(mu, make_weight({static_cast<Coord>(2 * n)})));
      break;
    case Family::E7:
      for (const auto& mu : by_fundamental_coefficients(RootDatum::e6(), bound)) emit(concat(mu, make_weight({0})));
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ClassifyReport classify_range(const HermitianPair& pair, int bound, const ClassifierOptions& options) {
  const std::vector<KRepresentation> candidates = enumerate_dominant(pair, bound);
  std::vector<MfResult> results(candidates.size());
  std::vector<std::exception_ptr> errors(candidates.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++) {
      try {
        results[i] = mf_check(pair, candidates[i], options.dimension_cap);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  ClassifyReport report;
  report.pair = pair;
  report.bound = bound;
  report.total = candidates.size();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const bool expected = theorem_list_contains(pair, candidates[i]);
    if (results[i].multiplicity_free == expected) {
      ++report.agree;
    } else {
      report.disagreements.push_back({candidates[i], results[i].multiplicity_free, expected, results[i].witness});
    }
  }
  return report;
}

namespace {

using Keyed = std::map<Weight, std::int64_t>;

// GL(2r) -> GL(2)^r by repeated Littlewood-Richardson steps; keys are the
// concatenated GL(2) highest weights.
Keyed gl2_blocks(const Weight& mu) {
  std::map<std::pair<Weight, Weight>, std::int64_t> state{{{Weight{}, mu}, 1}};
  Keyed out;
  while (!state.empty()) {
    std::map<std::pair<Weight, Weight>, std::int64_t> next;
    for (const auto& [key, m] : state) {
      const auto& [done, rest] = key;
      if (rest.size() == 2) {
        out[concat(done, rest)] += m;
        continue;
      }
      const BranchingMultiset split = lr_restrict(rest, 2, static_cast<int>(rest.size()) - 2);
      for (const auto& [k, c] : split.entries())
        next[{concat(done, slice(k, 0, 2)), slice(k, 2, k.size() - 2)}] += m * c;
    }
    state.swap(next);
  }
  return out;
}

}  // namespace

SectoredMultiset closed_form_decomposition(const HermitianPair& pair, const KRepresentation& tau) {
  if (!k_rep_valid(pair, tau))
    throw ShapeError(format_scaled(tau.highest) + " is not a valid representation of K for " + pair.name());
  const MModel model = build_m_model(pair);
  const Weight& w = tau.highest;
  SectoredMultiset sm;
  switch (pair.family) {
    case Family::A: {
      const int r = pair.n - pair.b;
      const Weight mu = slice(w, 0, static_cast<std::size_t>(pair.n));
      const Weight nu = slice(w, static_cast<std::size_t>(pair.n), static_cast<std::size_t>(r));
      const BranchingMultiset left = gl_branch_levi(mu, r, pair.b);
      const BranchingMultiset right = gl_branch_levi(nu, r, 0);
      for (const auto& [lk, lm] : left.entries()) {
        for (const auto& [rk, rm] : right.entries()) {
          Weight key = lk;
          for (std::size_t j = 0; j < static_cast<std::size_t>(r); ++j) key[j] = static_cast<Coord>(key[j] + rk[j]);
          sm[{SectorKey{}, key}] += lm * rm;
        }
      }
      return identify(sm, *model.identification);
    }
    case Family::C:
    case Family::Cmp: {
      const BranchingMultiset weights = gl_branch_levi(w, pair.n, 0);
      for (const auto& [x, m] : weights.entries()) {
        SectorKey key;
        for (const auto& l : model.finite_labels) key.push_back(l.evaluate(x).value);
        sm[{key, Weight{}}] += m;
      }
      return sm;
    }
    case Family::D: {
      const bool odd = pair.n % 2 == 1;
      Keyed blocks;
      if (odd) {
        const BranchingMultiset steps = gl_interlace_step(w);
        for (const auto& [k, m] : steps.entries()) {
          for (const auto& [b, c] : gl2_blocks(slice(k, 1, k.size() - 1)))
            blocks[concat(b, make_weight({k[0]}))] += m * c;
        }
      } else {
        blocks = gl2_blocks(w);
      }
      const int r = pair.n / 2;
      for (const auto& [b, m] : blocks) {
        Weight key;
        for (int j = 0; j < r; ++j) {
          const Coord d = static_cast<Coord>((b[static_cast<std::size_t>(2 * j)] - b[static_cast<std::size_t>(2 * j + 1)]) / 2);
          key.push_back(d);
          key.push_back(static_cast<Coord>(-d));
        }
        if (odd) key.push_back(b.back());
        sm[{SectorKey{}, key}] += m;
      }
      return sm;
    }
    default: throw ShapeError("no closed-form branching route for " + pair.name());
  }
}

bool cross_validate(const HermitianPair& pair, const KRepresentation& tau, std::int64_t dimension_cap) {
  return closed_form_decomposition(pair, tau) == m_decomposition(pair, tau, dimension_cap);
}

}  // namespace hmf
