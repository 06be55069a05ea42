#include "doctest.h"

#include "hmf/errors.hpp"
#include "hmf/restricted_weyl.hpp"

#include <map>
#include <set>

using namespace hmf;

namespace {

Nu numeric(std::initializer_list<Rational> values) {
  Nu nu;
  for (const auto& v : values) nu.push_back({v, -1});
  return nu;
}

// Squared norm with every indeterminate treated as an independent unit vector.
std::map<int, Rational> norm_by_symbol(const Nu& nu) {
  std::map<int, Rational> out;
  for (const auto& e : nu) out[e.symbol] += e.coeff * e.coeff;
  return out;
}

}  // namespace

TEST_CASE("group orders and closure") {
  CHECK(generate_weyl(1).size() == 2);
  CHECK(generate_weyl(2).size() == 8);
  CHECK(generate_weyl(3).size() == 48);
  CHECK(generate_weyl(4).size() == 384);
  CHECK_THROWS_AS(generate_weyl(0), ShapeError);
  CHECK_THROWS_AS(generate_weyl(9), ShapeError);

  for (int r = 1; r <= 4; ++r) {
    const auto w = generate_weyl(r);
    const std::set<SignedPermutation> elements(w.begin(), w.end());
    CHECK(elements.size() == w.size());
    const SignedPermutation e = SignedPermutation::identity(r);
    for (const auto& a : w) {
      CHECK(a * a.inverse() == e);
      CHECK(a.inverse() * a == e);
      for (const auto& b : w) CHECK(elements.count(a * b) == 1);
    }
  }
}

TEST_CASE("composition matches successive actions") {
  const Nu nu = numeric({Rational(1), Rational(2), Rational(-3, 2)});
  const auto w = generate_weyl(3);
  for (const auto& a : w)
    for (const auto& b : w) CHECK(act_on_nu(a * b, nu) == act_on_nu(a, act_on_nu(b, nu)));
}

TEST_CASE("rank two orbit") {
  const auto orbit_ab = orbit(2, {std::nullopt, numeric({Rational(1), Rational(2)})});
  CHECK(orbit_ab.size() == 8);
  CHECK(orbit_ab.count({std::nullopt, numeric({Rational(2), Rational(-1)})}) == 1);
  CHECK(orbit(2, {std::nullopt, numeric({Rational(1), Rational(0)})}).size() == 4);
  CHECK(orbit(2, {std::nullopt, numeric({Rational(0), Rational(0)})}).size() == 1);
}

TEST_CASE("property: orbit sizes divide the group order and preserve norms") {
  const std::vector<Rational> values = {Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(2)};
  for (int r = 1; r <= 3; ++r) {
    const std::size_t order = generate_weyl(r).size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
    while (true) {
      Nu nu;
      for (auto i : idx) nu.push_back({values[i], -1});
      const auto o = orbit(r, {std::nullopt, nu});
      CHECK(order % o.size() == 0);
      for (const auto& q : o) CHECK(norm_by_symbol(q.nu) == norm_by_symbol(nu));
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == values.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
}

TEST_CASE("symbolic parameters and labels") {
  const Nu nu = parse_nu("x1,x2");
  REQUIRE(nu.size() == 2);
  CHECK(nu[0].symbol == 0);
  CHECK(nu[1].coeff == Rational(1));

  const HermitianPair c2 = HermitianPair::type_c(2);
  const auto o = orbit(2, {std::vector<int>{1, 0}, nu}, &c2);
  CHECK(o.size() == 8);
  for (const auto& q : o) {
    REQUIRE(q.sigma);
    const int moved = (*q.sigma)[0] == 1 ? 0 : 1;
    CHECK((*q.sigma)[static_cast<std::size_t>(moved)] == 1);
    CHECK(q.nu[static_cast<std::size_t>(moved)].symbol == 0);
  }

  SignedPermutation flip = SignedPermutation::identity(2);
  flip.signs = {-1, 1};
  CHECK(act_on_sigma_typeC(c2, flip, {1, 0}) == std::vector<int>{1, 0});
  SignedPermutation swap = SignedPermutation::identity(2);
  swap.perm = {1, 0};
  CHECK(act_on_sigma_typeC(c2, swap, {1, 0}) == std::vector<int>{0, 1});
  CHECK(act_on_sigma_typeC(HermitianPair::type_cmp(2), swap, {3, 1}) == std::vector<int>{1, 3});

  CHECK_THROWS_AS(act_on_sigma_typeC(HermitianPair::type_d(4), swap, {1, 0}), ShapeError);
  CHECK_THROWS_AS(orbit(2, {std::vector<int>{1, 0}, nu}), ShapeError);
  CHECK_THROWS_AS(orbit(3, {std::nullopt, nu}), ShapeError);
}

TEST_CASE("parse and format spectral parameters") {
  const Nu nu = parse_nu("1/2, -x2, 3/2*x3, -4, 0");
  REQUIRE(nu.size() == 5);
  CHECK(nu[0] == NuEntry{Rational(1, 2), -1});
  CHECK(nu[1] == NuEntry{Rational(-1), 1});
  CHECK(nu[2] == NuEntry{Rational(3, 2), 2});
  CHECK(nu[3] == NuEntry{Rational(-4), -1});
  std::vector<std::string> text;
  for (const auto& e : nu) text.push_back(format_nu_entry(e));
  CHECK(text == std::vector<std::string>{"1/2", "-x2", "3/2*x3", "-4", "0"});

  for (const char* bad : {"", "1,,2", "x0", "1/0", "abc", "*x1", "2*"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_nu(bad), ParseError);
  }
}

TEST_CASE("rho_a is strictly dominant") {
  for (const char* spec : {"A:r=1,b=0", "A:r=3,b=2", "C:4", "Cmp:3", "D:6", "D:7", "BD:9", "BDspin:6", "E6", "E7"}) {
    const HermitianPair p = HermitianPair::parse(spec);
    const std::vector<Rational> rho = rho_a(p);
    const RestrictedWeylData data = restricted_weyl_data(p);
    REQUIRE(static_cast<int>(rho.size()) == data.rank);
    for (std::size_t i = 0; i + 1 < rho.size(); ++i) CHECK(rho[i] > rho[i + 1]);
    CHECK(rho.back() > Rational(0));
    const auto m = restricted_root_multiplicities(p);
    CHECK((data.type == RestrictedType::BC) == (m.single > 0));
  }
}
