#include "doctest.h"

#include "hmf/branch_rules.hpp"
#include "hmf/classifier.hpp"
#include "hmf/errors.hpp"
#include "hmf/restriction.hpp"

#include <algorithm>

using namespace hmf;

namespace {

Weight doubled(std::initializer_list<int> plain) {
  Weight w;
  for (int x : plain) w.push_back(static_cast<Coord>(2 * x));
  return w;
}

KRepresentation tau_of(Weight w) { return {std::move(w)}; }

bool enumerated(const std::vector<KRepresentation>& list, const HermitianPair& p, const KRepresentation& tau) {
  return std::find(list.begin(), list.end(), normalize(p, tau)) != list.end();
}

// Multiplicity of the witness recomputed from the materialized character,
// summing over the identification class for type A.
std::int64_t recount(const HermitianPair& p, const KRepresentation& tau, const Witness& w) {
  const MModel m = build_m_model(p);
  const FormalCharacter full = freudenthal_character(k_datum(p), tau.highest, 2000000);
  const SectoredCharacter sc = restrict_character(full, m.torus_map, m.finite_labels);
  const BranchingMultiset bm = decompose(m.reductive, sc.sectors.at(w.sector));
  std::int64_t total = 0;
  for (const auto& [hw, mult] : bm.entries()) {
    const Weight key = m.identification ? m.identification->canonical(hw) : hw;
    if (key == w.highest) total += mult;
  }
  return total;
}

}  // namespace

TEST_CASE("mf_check on the pointwise cases") {
  // Sp(2,R), S^2: two weights with labels (0,0)
  const MfResult s2 = mf_check(HermitianPair::type_c(2), tau_of(doubled({2, 0})));
  CHECK_FALSE(s2.multiplicity_free);
  REQUIRE(s2.witness);
  CHECK(s2.witness->sector == SectorKey{0, 0});
  CHECK(s2.dimension == 3);

  // GL(4) Levi two-gap case inside SU(2+2,2)... realized as A(2,2) with nu trivial
  const MfResult levi = mf_check(HermitianPair::type_a(2, 2), tau_of(concat(doubled({2, 1, 0, 0}), doubled({0, 0}))));
  CHECK_FALSE(levi.multiplicity_free);

  // E7: trivial Spin(8) constituent at least twice in omega_1
  const HermitianPair e7 = HermitianPair::e7();
  const MfResult w1 = mf_check(e7, tau_of(concat(RootDatum::e6().fundamental_weights()[0], make_weight({0}))));
  CHECK_FALSE(w1.multiplicity_free);
  REQUIRE(w1.witness);
  CHECK(w1.witness->highest == RootDatum::type_d(4).zero());
  CHECK(w1.witness->multiplicity >= 2);
  CHECK(w1.dimension == 27);

  // E6, 2 omega_1 (x) chi_2: (m/2, m/2, m/2 - 1) appears twice
  const MfResult e6_2w1 = mf_check(HermitianPair::e6(), tau_of(make_weight({2, 2, 2, 2, 2, 4})));
  CHECK_FALSE(e6_2w1.multiplicity_free);

  // E6, p+ = omega_1 (x) chi_1 contains the M-fixed root vectors e_1, e_2
  const MfResult p_plus = mf_check(HermitianPair::e6(), tau_of(make_weight({1, 1, 1, 1, 1, 2})));
  CHECK_FALSE(p_plus.multiplicity_free);
  REQUIRE(p_plus.witness);
  CHECK(p_plus.witness->highest == make_weight({0, 0, 0, 0}));
  CHECK(p_plus.witness->multiplicity == 2);

  // multiplicity-free cases
  CHECK(mf_check(HermitianPair::type_c(3), tau_of(doubled({1, 1, 0}))).multiplicity_free);
  CHECK(mf_check(HermitianPair::type_d(6), tau_of(doubled({4, 0, 0, 0, 0, 0}))).multiplicity_free);
  CHECK(mf_check(HermitianPair::type_bdspin(7), tau_of(make_weight({1, 1, 1, 1}))).multiplicity_free);
  CHECK(mf_check(HermitianPair::type_bd(8), tau_of(make_weight({4, 4, 4, -4, 0}))).multiplicity_free);
  CHECK(mf_check(HermitianPair::type_a(1, 2), tau_of(concat(doubled({3, 1, 0}), doubled({5})))).multiplicity_free);

  CHECK_THROWS_AS(mf_check(HermitianPair::type_c(2), tau_of(doubled({0, 2}))), ShapeError);
  const Weight two_w4 = mul(2, RootDatum::e6().fundamental_weights()[3]);
  CHECK_THROWS_AS(mf_check(e7, tau_of(concat(two_w4, make_weight({0})))), ResourceError);
}

TEST_CASE("enumeration examples") {
  const HermitianPair c2 = HermitianPair::type_c(2);
  const auto c2_list = enumerate_dominant(c2, 4);
  for (auto w : {doubled({0, 0}), doubled({1, 0}), doubled({1, 1}), doubled({2, 0}), doubled({2, 1}), doubled({2, 2})})
    CHECK(enumerated(c2_list, c2, tau_of(w)));
  CHECK(c2_list.size() == 3);

  const HermitianPair bd6 = HermitianPair::type_bd(6);
  const auto bd6_list = enumerate_dominant(bd6, 4);
  for (auto w : {make_weight({2, 2, 2, 0}), make_weight({2, 2, -2, 0}), make_weight({4, 4, 4, 0})})
    CHECK(enumerated(bd6_list, bd6, tau_of(w)));

  const HermitianPair e7 = HermitianPair::e7();
  const auto e7_list = enumerate_dominant(e7, 2);
  const RootDatum e6 = RootDatum::e6();
  const auto& f = e6.fundamental_weights();
  for (auto w : {e6.zero(), f[0], f[5], add(f[0], f[5])})
    CHECK(enumerated(e7_list, e7, tau_of(concat(w, make_weight({0})))));
  CHECK(e7_list.size() == 28);  // 1 + 6 + 21 coefficient vectors

  for (const auto& tau : enumerate_dominant(HermitianPair::e6(), 2)) CHECK(k_rep_valid(HermitianPair::e6(), tau));
  CHECK(enumerate_dominant(HermitianPair::type_cmp(2), 2).size() == 3);
}

TEST_CASE("classify_range examples and determinism") {
  const ClassifyReport a11 = classify_range(HermitianPair::type_a(1, 1), 6);
  CHECK(a11.disagreements.empty());
  CHECK(a11.agree == a11.total);
  for (const auto& tau : enumerate_dominant(HermitianPair::type_a(1, 1), 6))
    CHECK(mf_check(HermitianPair::type_a(1, 1), tau).multiplicity_free);

  CHECK(classify_range(HermitianPair::type_c(2), 6).disagreements.empty());
  CHECK(classify_range(HermitianPair::type_d(4), 6).disagreements.empty());

  ClassifierOptions four;
  four.jobs = 4;
  for (const char* spec : {"A:r=2,b=1", "D:3", "E6"}) {
    const HermitianPair p = HermitianPair::parse(spec);
    const int bound = p.family == Family::E6 ? 2 : 6;
    const ClassifyReport serial = classify_range(p, bound);
    const ClassifyReport parallel = classify_range(p, bound, four);
    CHECK(serial.total == parallel.total);
    CHECK(serial.agree == parallel.agree);
    REQUIRE(serial.disagreements.size() == parallel.disagreements.size());
    for (std::size_t i = 0; i < serial.disagreements.size(); ++i) {
      CHECK(serial.disagreements[i].tau == parallel.disagreements[i].tau);
      CHECK(serial.disagreements[i].verdict == parallel.disagreements[i].verdict);
    }
  }
}

TEST_CASE("property: verdicts are invariant under character twists") {
  struct Case {
    const char* spec;
    std::vector<Weight> chars;
  };
  const std::vector<Case> cases = {
      {"A:r=2,b=1", {concat(doubled({1, 1, 1}), doubled({0, 0})), concat(doubled({0, 0, 0}), doubled({-2, -2}))}},
      {"C:3", {doubled({1, 1, 1})}},
      {"Cmp:2", {make_weight({1, 1}), make_weight({-3, -3})}},
      {"D:5", {doubled({-1, -1, -1, -1, -1})}},
      {"BDspin:6", {make_weight({0, 0, 0, 2})}},
      {"E6", {make_weight({0, 0, 0, 0, 0, 8})}},
  };
  for (const auto& c : cases) {
    const HermitianPair p = HermitianPair::parse(c.spec);
    for (const auto& tau : enumerate_dominant(p, p.family == Family::E6 ? 1 : 4)) {
      const bool base = mf_check(p, tau).multiplicity_free;
      for (const auto& chi : c.chars) {
        CAPTURE(c.spec);
        CHECK(mf_check(p, tau_of(add(tau.highest, chi))).multiplicity_free == base);
      }
    }
  }
}

TEST_CASE("property: every witness recounts to at least two") {
  for (const char* spec : {"A:r=2,b=1", "A:r=3,b=1", "C:3", "Cmp:2", "D:4", "D:5", "BD:6", "BDspin:5", "E6"}) {
    const HermitianPair p = HermitianPair::parse(spec);
    for (const auto& tau : enumerate_dominant(p, p.family == Family::E6 ? 2 : 4)) {
      const MfResult r = mf_check(p, tau);
      if (r.multiplicity_free) continue;
      REQUIRE(r.witness);
      CAPTURE(spec);
      CHECK(recount(p, tau, *r.witness) == r.witness->multiplicity);
      CHECK(r.witness->multiplicity >= 2);
    }
  }
}

TEST_CASE("cross validation of closed-form and character routes") {
  CHECK(cross_validate(HermitianPair::type_a(2, 2), tau_of(concat(one_gap_family(2, 2, 1, 4), doubled({3, 3})))));
  CHECK(cross_validate(HermitianPair::type_c(3), tau_of(doubled({1, 1, 0}))));

  const HermitianPair d4 = HermitianPair::type_d(4);
  const KRepresentation s3 = tau_of(doubled({3, 0, 0, 0}));
  CHECK(cross_validate(d4, s3));
  SectoredMultiset expected;
  const BranchingMultiset blocks = su2_blocks_symmetric(3, 2);
  for (const auto& [k, m] : blocks.entries()) expected[{SectorKey{}, k}] += m;
  CHECK(closed_form_decomposition(d4, s3) == expected);

  for (const char* spec : {"A:r=1,b=1", "A:r=2,b=1", "A:r=2,b=2", "A:r=3,b=1", "C:2", "C:3", "Cmp:2", "Cmp:3", "D:3",
                           "D:4", "D:5"}) {
    const HermitianPair p = HermitianPair::parse(spec);
    for (const auto& tau : enumerate_dominant(p, 4)) {
      CAPTURE(spec);
      CHECK(cross_validate(p, tau));
    }
  }
  CHECK_THROWS_AS(closed_form_decomposition(HermitianPair::e7(), tau_of(Weight(9, 0))), ShapeError);
}
