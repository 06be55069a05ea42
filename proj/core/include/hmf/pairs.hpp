#pragma once

#include "hmf/decompose.hpp"
#include "hmf/restriction.hpp"
#include "hmf/root_datum.hpp"

#include <boost/rational.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hmf {

enum class Family { A, C, Cmp, D, BD, BDspin, E6, E7 };

// One of the irreducible Hermitian symmetric pairs (G, K), possibly with a
// double cover of K. `n` is the size parameter (A: r + b); `b` is used by
// type A only.
struct HermitianPair {
  Family family = Family::A;
  int n = 0;
  int b = 0;

  static HermitianPair type_a(int r, int b);
  static HermitianPair type_c(int n);
  static HermitianPair type_cmp(int n);
  static HermitianPair type_d(int n);
  static HermitianPair type_bd(int n);
  static HermitianPair type_bdspin(int n);
  static HermitianPair e6();
  static HermitianPair e7();
  // "A:r=2,b=1", "C:3", "Cmp:3", "D:8", "BD:6", "BDspin:7", "E6", "E7".
  static HermitianPair parse(const std::string& spec);

  int rank() const;
  bool cover() const { return family == Family::Cmp || family == Family::BDspin; }
  std::string name() const;
  bool operator==(const HermitianPair&) const = default;
};

// Complexified Lie algebra of K as a root datum. Central characters live in
// torus coordinates: the U(1) exponent for E6 and E7 and the SO(2)
// character for BD are the last coordinate.
RootDatum k_datum(const HermitianPair& pair);

// An irreducible representation of K, given by its highest weight in the
// scaled coordinates of k_datum(pair).
struct KRepresentation {
  Weight highest;
  bool operator==(const KRepresentation&) const = default;
  bool operator<(const KRepresentation& o) const { return highest < o.highest; }
};

// Torus-and-finite-label shadow of M = C_K(a).
struct MModel {
  RootDatum reductive;
  TorusMap torus_map;
  std::vector<LabelFunctional> finite_labels;
  std::optional<LatticeIdentification> identification;
};

MModel build_m_model(const HermitianPair& pair);

// Dominant for k_datum and descends to the group K of the pair.
bool k_rep_valid(const HermitianPair& pair, const KRepresentation& tau);

// Representative of tau modulo characters of K.
KRepresentation normalize(const HermitianPair& pair, const KRepresentation& tau);

// Membership in the classified list of representations with multiplicity-free
// restriction to M. Throws ShapeError for invalid tau.
bool theorem_list_contains(const HermitianPair& pair, const KRepresentation& tau);

struct RootMultiplicities {
  int pair = 0;    // e_i +- e_j
  int single = 0;  // e_i
  int twice = 0;   // 2 e_i
};

RootMultiplicities restricted_root_multiplicities(const HermitianPair& pair);

// Real dimension of p = dim G/K.
int dim_p(const HermitianPair& pair);

using Rational = boost::rational<std::int64_t>;

// Half-sum of positive restricted roots with multiplicity, e-coordinates.
std::vector<Rational> rho_a(const HermitianPair& pair);

enum class RestrictedType { C, BC };

struct RestrictedWeylData {
  int rank = 0;
  RestrictedType type = RestrictedType::C;
};

RestrictedWeylData restricted_weyl_data(const HermitianPair& pair);

std::string format_krep(const HermitianPair& pair, const KRepresentation& tau);

}  // namespace hmf
