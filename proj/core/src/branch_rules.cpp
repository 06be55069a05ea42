#include "hmf/branch_rules.hpp"

#include "hmf/errors.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>

namespace hmf {

namespace {

bool weakly_decreasing(const Weight& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] < w[i]) return false;
  return true;
}

void require_gl_dominant(const Weight& mu) {
  if (mu.empty()) throw ShapeError("GL weight must have at least one coordinate");
  if (!weakly_decreasing(mu)) throw ShapeError("GL weight " + format_scaled(mu) + " is not dominant");
  for (auto x : mu)
    if ((x - mu[0]) % 2 != 0) throw ShapeError("GL weight " + format_scaled(mu) + " mixes integer and half-integer entries");
}

// Doubled weight -> (plain partition, doubled shift) with mu = 2 * part + shift.
std::pair<std::vector<int>, Coord> split_shift(const Weight& mu) {
  const Coord shift = mu.back();
  std::vector<int> part;
  for (auto x : mu) part.push_back((x - shift) / 2);
  return {part, shift};
}

Weight with_shift(const std::vector<int>& part, Coord shift) {
  Weight w;
  for (int x : part) w.push_back(static_cast<Coord>(2 * x + shift));
  return w;
}

// All nu interlacing a partition: mu_1 >= nu_1 >= mu_2 >= ... >= nu_{n-1} >= mu_n.
void interlacing(const std::vector<int>& mu, const std::function<void(const std::vector<int>&)>& fn) {
  const std::size_t n = mu.size();
  std::vector<int> nu(n - 1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n - 1) {
      fn(nu);
      return;
    }
    for (int v = mu[i + 1]; v <= mu[i]; ++v) {
      nu[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

BranchingMultiset gl_interlace_step(const Weight& mu) {
  require_gl_dominant(mu);
  if (mu.size() < 2) throw ShapeError("interlacing step needs n >= 2");
  auto [part, shift] = split_shift(mu);
  const int total = std::accumulate(part.begin(), part.end(), 0);
  BranchingMultiset out;
  interlacing(part, [&](const std::vector<int>& nu) {
    const int c = total - std::accumulate(nu.begin(), nu.end(), 0);
    Weight key{static_cast<Coord>(2 * c + shift)};
    out.add(concat(key, with_shift(nu, shift)), 1);
  });
  return out;
}

BranchingMultiset gl_branch_levi(const Weight& mu, int r, int b) {
  require_gl_dominant(mu);
  if (r < 0 || b < 0 || mu.empty() || static_cast<int>(mu.size()) != r + b)
    throw ShapeError("gl_branch_levi needs r, b >= 0 and r + b >= 1 coordinates");
  // state: (extracted characters, remaining GL weight)
  std::map<std::pair<Weight, Weight>, std::int64_t> state{{{Weight{}, mu}, 1}};
  for (int step = 0; step < r; ++step) {
    std::map<std::pair<Weight, Weight>, std::int64_t> next;
    for (const auto& [key, m] : state) {
      const auto& [chars, rest] = key;
      if (rest.size() == 1) {
        Weight c = chars;
        c.push_back(rest[0]);
        next[{c, Weight{}}] += m;
        continue;
      }
      const BranchingMultiset split = gl_interlace_step(rest);
      for (const auto& [kv, one] : split.entries()) {
        Weight c = chars;
        c.push_back(kv[0]);
        next[{c, slice(kv, 1, kv.size() - 1)}] += m * one;
      }
    }
    state.swap(next);
  }
  BranchingMultiset out;
  for (const auto& [key, m] : state) out.add(concat(key.first, key.second), m);
  return out;
}

BranchingMultiset so_branch_step(const Weight& mu, bool source_is_b) {
  const std::size_t k = mu.size();
  if (k == 0) {
    BranchingMultiset out;
    out.add(Weight{}, 1);
    return out;
  }
  for (auto x : mu)
    if ((x - mu[0]) % 2 != 0) throw ShapeError("orthogonal weight mixes integer and half-integer entries");
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (mu[i] < mu[i + 1]) throw ShapeError("orthogonal weight " + format_scaled(mu) + " is not dominant");
  const bool bad_tail = source_is_b ? mu[k - 1] < 0 : (k >= 2 && mu[k - 2] < std::abs(mu[k - 1]));
  if (bad_tail) throw ShapeError("orthogonal weight " + format_scaled(mu) + " is not dominant");

  BranchingMultiset out;
  Weight xi(source_is_b ? k : k - 1);
  const Coord parity = static_cast<Coord>(((mu[0] % 2) + 2) % 2);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == xi.size()) {
      out.add(xi, 1);
      return;
    }
    Coord hi, lo;
    if (source_is_b) {
      // mu_1 >= xi_1 >= mu_2 >= ... >= mu_k >= |xi_k|
      hi = mu[i];
      lo = (i + 1 < k) ? mu[i + 1] : static_cast<Coord>(-mu[k - 1]);
    } else {
      // mu_1 >= xi_1 >= mu_2 >= ... >= xi_{k-1} >= |mu_k|
      hi = mu[i];
      lo = (i + 2 < k) ? mu[i + 1] : static_cast<Coord>(std::abs(mu[k - 1]));
    }
    for (Coord v = lo; v <= hi; v = static_cast<Coord>(v + 2)) {
      if (((v % 2) + 2) % 2 != parity) continue;
      xi[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

namespace {

// Counts LR fillings of lambda/mu by content.
void lr_fillings(const std::vector<int>& lambda, const std::vector<int>& mu, int max_value,
                 std::map<std::vector<int>, std::int64_t>& by_content) {
  const std::size_t rows = lambda.size();
  std::vector<std::vector<int>> t(rows);
  for (std::size_t i = 0; i < rows; ++i) t[i].assign(static_cast<std::size_t>(lambda[i]), 0);
  std::vector<int> count(static_cast<std::size_t>(max_value) + 2, 0);
  auto mu_at = [&](std::size_t i) { return i < mu.size() ? mu[i] : 0; };

  // Reading order: rows top to bottom, each row right to left.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int col) {
    if (i == rows) {
      std::vector<int> content;
      for (int v = 1; v <= max_value; ++v)
        if (count[static_cast<std::size_t>(v)]) content.push_back(count[static_cast<std::size_t>(v)]);
      by_content[content] += 1;
      return;
    }
    if (col < mu_at(i)) {
      rec(i + 1, i + 1 < rows ? lambda[i + 1] - 1 : 0);
      return;
    }
    const auto c = static_cast<std::size_t>(col);
    // weakly increasing rows: the cell to the right (already filled) bounds from above
    int hi = (col + 1 < lambda[i]) ? t[i][c + 1] : max_value;
    int lo = 1;
    if (i > 0 && col >= mu_at(i - 1)) lo = t[i - 1][c] + 1;  // strictly increasing columns
    hi = std::min(hi, static_cast<int>(i) + 1);
    for (int v = lo; v <= hi; ++v) {
      if (v > 1 && count[static_cast<std::size_t>(v)] + 1 > count[static_cast<std::size_t>(v - 1)]) continue;
      t[i][c] = v;
      ++count[static_cast<std::size_t>(v)];
      if (col == 0)
        rec(i + 1, i + 1 < rows ? lambda[i + 1] - 1 : 0);
      else
        rec(i, col - 1);
      --count[static_cast<std::size_t>(v)];
    }
  };
  rec(0, rows ? lambda[0] - 1 : 0);
}

std::vector<int> trim(std::vector<int> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// All partitions contained in lambda with at most max_len parts.
void sub_partitions(const std::vector<int>& lambda, std::size_t max_len,
                    const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> mu(lambda.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == lambda.size()) {
      fn(mu);
      return;
    }
    const int upper = (i == 0) ? lambda[0] : std::min(lambda[i], mu[i - 1]);
    const int cap = (i < max_len) ? upper : 0;
    for (int v = 0; v <= cap; ++v) {
      mu[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

std::int64_t lr_coefficient(const std::vector<int>& lambda, const std::vector<int>& mu, const std::vector<int>& nu) {
  const auto l = trim(lambda);
  const auto m = trim(mu);
  const auto n = trim(nu);
  if (std::accumulate(l.begin(), l.end(), 0) != std::accumulate(m.begin(), m.end(), 0) + std::accumulate(n.begin(), n.end(), 0))
    return 0;
  if (m.size() > l.size()) return 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > l[i]) return 0;
  std::map<std::vector<int>, std::int64_t> by_content;
  lr_fillings(l, m, static_cast<int>(l.size()), by_content);
  auto it = by_content.find(n);
  return it == by_content.end() ? 0 : it->second;
}

BranchingMultiset lr_restrict(const Weight& lambda, int p, int q) {
  require_gl_dominant(lambda);
  if (p < 1 || q < 1 || static_cast<int>(lambda.size()) != p + q)
    throw ShapeError("lr_restrict needs p, q >= 1 and p + q coordinates");
  auto [part, shift] = split_shift(lambda);
  for (int x : part)
    if (x < 0) throw ShapeError("negative entry after normalization");
  const auto l = trim(part);
  BranchingMultiset out;
  sub_partitions(part, static_cast<std::size_t>(p), [&](const std::vector<int>& mu_full) {
    const auto m = trim(mu_full);
    std::map<std::vector<int>, std::int64_t> by_content;
    lr_fillings(l, m, static_cast<int>(l.size()), by_content);
    for (const auto& [nu, c] : by_content) {
      if (nu.size() > static_cast<std::size_t>(q)) continue;
      std::vector<int> mu_p(m), nu_q(nu);
      mu_p.resize(static_cast<std::size_t>(p), 0);
      nu_q.resize(static_cast<std::size_t>(q), 0);
      out.add(concat(with_shift(mu_p, shift), with_shift(nu_q, shift)), c);
    }
  });
  return out;
}

BranchingMultiset su2_blocks_symmetric(int m, int r) {
  if (m < 0 || r < 1) throw ShapeError("su2_blocks_symmetric needs m >= 0 and r >= 1");
  BranchingMultiset out;
  Weight key(static_cast<std::size_t>(2 * r), 0);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == r - 1) {
      key[static_cast<std::size_t>(2 * j)] = static_cast<Coord>(left);
      key[static_cast<std::size_t>(2 * j + 1)] = static_cast<Coord>(-left);
      out.add(key, 1);
      return;
    }
    for (int i = 0; i <= left; ++i) {
      key[static_cast<std::size_t>(2 * j)] = static_cast<Coord>(i);
      key[static_cast<std::size_t>(2 * j + 1)] = static_cast<Coord>(-i);
      rec(j + 1, left - i);
    }
  };
  rec(0, m);
  return out;
}

Weight one_gap_family(int j, int l1, int l2, int n) {
  if (n < 2 || j < 1 || j > n - 1 || l1 < 0 || l2 < 0)
    throw ShapeError("one_gap_family needs 1 <= j <= n - 1 and l1, l2 >= 0");
  Weight w;
  for (int i = 0; i < n; ++i) w.push_back(static_cast<Coord>(2 * (i < j ? l1 + l2 : l2)));
  return w;
}

}  // namespace hmf
