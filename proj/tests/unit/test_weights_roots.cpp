#include "doctest.h"

#include "hmf/errors.hpp"
#include "hmf/freudenthal.hpp"
#include "hmf/root_datum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

using namespace hmf;

namespace {

Weight doubled(std::initializer_list<int> plain) {
  Weight w;
  for (int x : plain) w.push_back(2 * x);
  return w;
}

// Gelfand-Tsetlin oracle: enumerate interlacing patterns below mu and record
// the row-sum differences as the weight.
std::map<Weight, std::int64_t> gt_character(const std::vector<int>& mu) {
  std::map<Weight, std::int64_t> out;
  const int n = static_cast<int>(mu.size());
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& row) {
    const int k = static_cast<int>(row.size());
    const int row_sum = std::accumulate(row.begin(), row.end(), 0);
    if (k == 1) {
      weight[0] = row_sum;
      Weight w;
      for (int x : weight) w.push_back(2 * x);
      out[w] += 1;
      return;
    }
    std::vector<int> below(static_cast<std::size_t>(k - 1));
    std::function<void(int)> fill = [&](int i) {
      if (i == k - 1) {
        weight[static_cast<std::size_t>(k - 1)] = row_sum - std::accumulate(below.begin(), below.end(), 0);
        rec(below);
        return;
      }
      for (int v = row[static_cast<std::size_t>(i + 1)]; v <= row[static_cast<std::size_t>(i)]; ++v) {
        below[static_cast<std::size_t>(i)] = v;
        fill(i + 1);
      }
    };
    fill(0);
  };
  rec(mu);
  return out;
}

// All sign vectors with an even number of minus signs on (1/2,...,1/2).
std::map<Weight, std::int64_t> half_spin_oracle(int k) {
  std::map<Weight, std::int64_t> out;
  for (int mask = 0; mask < (1 << k); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2) continue;
    Weight w;
    for (int i = 0; i < k; ++i) w.push_back((mask >> i) & 1 ? -1 : 1);
    out[w] += 1;
  }
  return out;
}

bool below_in_dominance(const RootDatum& d, const Weight& lambda, const Weight& w) {
  Weight diff = sub(lambda, w);
  // the difference must be a nonnegative integer combination of simple roots
  const auto& fw = d.fundamental_weights();
  const auto& simple = d.simple_roots();
  Weight rebuilt = d.zero();
  std::size_t j = 0;
  for (std::size_t i = 0; i < simple.size(); ++i, ++j) {
    const std::int64_t num = 2 * dot(diff, fw[j]);
    const std::int64_t norm = d.simple_root_norms()[i];
    if (num % norm != 0) return false;
    const std::int64_t c = num / norm;
    if (c < 0) return false;
    rebuilt = add(rebuilt, mul(c, simple[i]));
  }
  return rebuilt == diff;
}

std::vector<RootDatum> sample_data() {
  return {RootDatum::gl(3),     RootDatum::gl(4),     RootDatum::type_b(2), RootDatum::type_b(3),
          RootDatum::type_c(2), RootDatum::type_c(3), RootDatum::type_d(3), RootDatum::type_d(4),
          RootDatum::gl(2) + RootDatum::type_b(2) + RootDatum::torus(1)};
}

Weight random_dominant(const RootDatum& d, std::mt19937& rng, int max_coeff) {
  Weight w = d.zero();
  std::uniform_int_distribution<int> coin(0, max_coeff);
  for (const auto& f : d.fundamental_weights()) w = add(w, mul(coin(rng), f));
  return w;
}

}  // namespace

TEST_CASE("dominance examples") {
  CHECK(is_dominant(RootDatum::gl(3), doubled({2, 1, 0})));
  CHECK_FALSE(is_dominant(RootDatum::gl(3), doubled({0, 1, 0})));
  CHECK(is_dominant(RootDatum::type_d(5), make_weight({1, 1, 1, 1, -1})));
  CHECK_FALSE(is_dominant(RootDatum::type_d(5), make_weight({1, 1, 1, -1, -1})));
  CHECK_THROWS_AS(is_dominant(RootDatum::gl(3), doubled({1, 0})), ShapeError);
  CHECK_THROWS_AS(DominantWeight(RootDatum::gl(2), doubled({0, 1})), ShapeError);
}

TEST_CASE("positive root counts and Weyl group orders") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(RootDatum::gl(n).positive_roots().size() == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(RootDatum::type_b(n).positive_roots().size() == static_cast<std::size_t>(n * n));
    CHECK(RootDatum::type_c(n).positive_roots().size() == static_cast<std::size_t>(n * n));
    if (n >= 2) CHECK(RootDatum::type_d(n).positive_roots().size() == static_cast<std::size_t>(n * (n - 1)));
  }
  RootDatum e6 = RootDatum::e6();
  CHECK(e6.positive_roots().size() == 36);
  CHECK(e6.dim() == 8);
  CHECK(e6.scale() == 6);
  CHECK(e6.weyl_group_order() == 51840);
  CHECK(RootDatum::type_d(4).weyl_group_order() == 192);
  CHECK(RootDatum::gl(4).central_torus_rank() == 1);
  CHECK((RootDatum::type_d(5) + RootDatum::torus(1)).central_torus_rank() == 1);
}

TEST_CASE("simple roots are positive and fundamental weights are dual to simple coroots") {
  std::vector<RootDatum> data = sample_data();
  data.push_back(RootDatum::e6());
  data.push_back(RootDatum::type_d(5));
  data.push_back(RootDatum::type_b(1));
  data.push_back(RootDatum::type_d(2));
  for (const auto& d : data) {
    CAPTURE(d.name());
    for (const auto& a : d.simple_roots())
      CHECK(std::find(d.positive_roots().begin(), d.positive_roots().end(), a) != d.positive_roots().end());
    const auto& fw = d.fundamental_weights();
    REQUIRE(fw.size() == d.simple_roots().size());
    for (std::size_t i = 0; i < fw.size(); ++i) {
      const auto labels = dynkin_labels(d, fw[i]);
      for (std::size_t j = 0; j < labels.size(); ++j) CHECK(labels[j] == (i == j ? 1 : 0));
    }
    // every positive root is a nonnegative combination of simple roots
    for (const auto& a : d.positive_roots()) CHECK(below_in_dominance(d, a, d.zero()));
  }
}

TEST_CASE("Weyl dimension examples") {
  CHECK(weyl_dim(RootDatum::gl(3), doubled({1, 0, 0})) == 3);
  RootDatum e6 = RootDatum::e6();
  const std::vector<std::int64_t> fundamental_dims = {27, 78, 351, 2925, 351, 27};
  for (std::size_t i = 0; i < 6; ++i) CHECK(weyl_dim(e6, e6.fundamental_weights()[i]) == fundamental_dims[i]);
  CHECK(weyl_dim(RootDatum::type_d(5), make_weight({1, 1, 1, 1, 1})) == 16);
  CHECK(weyl_dim(RootDatum::type_b(3), make_weight({1, 1, 1})) == 8);
  CHECK(weyl_dim(RootDatum::type_c(2), doubled({1, 1})) == 5);
}

TEST_CASE("E6 fundamental weights have the expected norms") {
  // ω1 and ω6 are minuscule with |ω|^2 = 4/3; ω2 is the highest root.
  RootDatum e6 = RootDatum::e6();
  const auto& fw = e6.fundamental_weights();
  CHECK(dot(fw[0], fw[0]) * 3 == 4 * 36);
  CHECK(dot(fw[5], fw[5]) * 3 == 4 * 36);
  CHECK(dot(fw[1], fw[1]) == 2 * 36);
  const Weight& highest_root = *std::max_element(e6.positive_roots().begin(), e6.positive_roots().end(),
                                                 [&](const Weight& a, const Weight& b) {
                                                   return dot(a, e6.rho()) < dot(b, e6.rho());
                                                 });
  CHECK(highest_root == fw[1]);
}

TEST_CASE("Freudenthal: S^2 of C^2") {
  FormalCharacter ch = freudenthal_character(RootDatum::gl(2), doubled({2, 0}));
  CHECK(ch.size() == 3);
  CHECK(ch.multiplicity(doubled({2, 0})) == 1);
  CHECK(ch.multiplicity(doubled({1, 1})) == 1);
  CHECK(ch.multiplicity(doubled({0, 2})) == 1);
}

TEST_CASE("Freudenthal agrees with Gelfand-Tsetlin patterns") {
  FormalCharacter ch = freudenthal_character(RootDatum::gl(4), doubled({2, 2, 0, 0}));
  CHECK(ch.multiplicity(doubled({1, 1, 1, 1})) == 2);
  const std::vector<std::vector<int>> shapes = {{2, 2, 0, 0}, {3, 1, 0, 0}, {2, 1, 1, 0}, {3, 2, 1, 0},
                                                {4, 0, 0, 0}, {2, 1, 0},    {3, 3, 1},    {2, 2, 1, 1, 0},
                                                {3, 1, 1, 0, 0}};
  for (const auto& mu : shapes) {
    Weight lambda;
    for (int x : mu) lambda.push_back(2 * x);
    FormalCharacter f = freudenthal_character(RootDatum::gl(static_cast<int>(mu.size())), lambda);
    CHECK(f.terms() == gt_character(mu));
  }
}

TEST_CASE("Freudenthal: half-spin representation of D5") {
  FormalCharacter ch = freudenthal_character(RootDatum::type_d(5), make_weight({1, 1, 1, 1, 1}));
  CHECK(ch.size() == 16);
  CHECK(ch.terms() == half_spin_oracle(5));
  CHECK(ch.total() == weyl_dim(RootDatum::type_d(5), make_weight({1, 1, 1, 1, 1})));
}

TEST_CASE("Freudenthal: minuscule E6 representation has 27 weights of multiplicity one") {
  RootDatum e6 = RootDatum::e6();
  FormalCharacter ch = freudenthal_character(e6, e6.fundamental_weights()[0]);
  CHECK(ch.size() == 27);
  for (const auto& [w, m] : ch.terms()) CHECK(m == 1);
  FormalCharacter adj = freudenthal_character(e6, e6.fundamental_weights()[1]);
  CHECK(adj.multiplicity(e6.zero()) == 6);
  CHECK(adj.total() == 78);
}

TEST_CASE("Freudenthal respects the dimension cap") {
  RootDatum e6 = RootDatum::e6();
  const Weight lambda = mul(2, e6.fundamental_weights()[3]);
  try {
    freudenthal_dominant(e6, lambda);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(e.dimension() == 1337050);
  }
  CHECK_THROWS_AS(freudenthal_character(RootDatum::gl(3), doubled({3, 0, 0}), 5), ResourceError);
}

TEST_CASE("Weyl orbits") {
  auto orbit = weyl_orbit_weight(RootDatum::gl(3), doubled({1, 0, 0}));
  CHECK(orbit == std::set<Weight>{doubled({1, 0, 0}), doubled({0, 1, 0}), doubled({0, 0, 1})});

  // signed permutations with an even number of sign changes
  std::set<Weight> oracle;
  const Weight w = doubled({1, 0});
  std::vector<int> perm = {0, 1};
  do {
    for (int mask = 0; mask < 4; ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) % 2) continue;
      Weight x(2, 0);
      for (int i = 0; i < 2; ++i) x[static_cast<std::size_t>(i)] = ((mask >> i) & 1 ? -1 : 1) * w[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      oracle.insert(x);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(weyl_orbit_weight(RootDatum::type_d(2), w) == oracle);
  CHECK(oracle.size() == 4);

  for (const auto& d : sample_data()) CHECK(weyl_orbit_weight(d, d.zero()).size() == 1);
  CHECK(weyl_orbit_weight(RootDatum::e6(), RootDatum::e6().fundamental_weights()[0]).size() == 27);
}

TEST_CASE("property: multiplicities are Weyl invariant, sum to the dimension, and lie below lambda") {
  std::mt19937 rng(20241015);
  for (const auto& d : sample_data()) {
    for (int trial = 0; trial < 6; ++trial) {
      const Weight lambda = random_dominant(d, rng, 2);
      CAPTURE(d.name());
      CAPTURE(format_scaled(lambda));
      FormalCharacter ch = freudenthal_character(d, lambda);
      CHECK(ch.total() == weyl_dim(d, lambda));
      CHECK(ch.multiplicity(lambda) == 1);
      for (const auto& [w, m] : ch.terms()) {
        CHECK(below_in_dominance(d, lambda, w));
        for (std::size_t i = 0; i < d.simple_roots().size(); ++i)
          CHECK(ch.multiplicity(reflect(w, d.simple_roots()[i], d.simple_root_norms()[i])) == m);
      }
    }
  }
}
