#pragma once

#include "hmf/weight.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace hmf {

enum class FactorType { A, B, C, D, E6, Torus };

struct Factor {
  FactorType type;
  int rank;    // Lie rank; for a torus, its dimension
  int offset;  // first ambient coordinate of the slice
  int width;   // number of ambient coordinates in the slice
};

// A reductive Lie algebra given as a direct sum of simple factors and tori,
// each occupying a contiguous slice of ambient orthonormal coordinates.
//
// Type A of rank n-1 lives in n coordinates and therefore carries a central
// direction of its own: gl(n) rather than sl(n). E6 uses the 8-coordinate
// realization; any datum containing E6 uses scale 6, all others scale 2.
class RootDatum {
 public:
  RootDatum();

  static RootDatum gl(int n);
  static RootDatum type_b(int k);
  static RootDatum type_c(int k);
  static RootDatum type_d(int k);
  static RootDatum so(int n);
  static RootDatum e6();
  static RootDatum torus(int k);

  static RootDatum direct_sum(const std::vector<RootDatum>& parts);
  RootDatum operator+(const RootDatum& other) const { return direct_sum({*this, other}); }

  int dim() const { return dim_; }
  int scale() const { return scale_; }
  int semisimple_rank() const { return static_cast<int>(simple_.size()); }
  int central_torus_rank() const { return dim_ - semisimple_rank(); }
  const std::vector<Factor>& factors() const { return factors_; }

  const std::vector<Weight>& simple_roots() const { return simple_; }
  const std::vector<Weight>& positive_roots() const { return positive_; }
  const Weight& rho() const { return rho_; }
  const std::vector<std::int64_t>& simple_root_norms() const { return simple_norms_; }

  // Fundamental weights of each simple factor in Bourbaki order, factor by
  // factor, embedded in the ambient coordinates. For type A these are
  // e_1 + ... + e_i.
  const std::vector<Weight>& fundamental_weights() const { return fundamental_; }

  // Number of fundamental weights belonging to each factor (0 for tori).
  std::vector<int> fundamental_counts() const;

  std::int64_t weyl_group_order() const;
  std::string name() const;

  void check_shape(const Weight& w) const;
  Weight zero() const { return Weight(static_cast<std::size_t>(dim_), 0); }

  bool operator==(const RootDatum& other) const;

 private:
  void build();

  std::vector<Factor> factors_;
  int dim_ = 0;
  int scale_ = 2;
  std::vector<Weight> simple_;
  std::vector<Weight> positive_;
  std::vector<std::int64_t> simple_norms_;
  std::vector<Weight> fundamental_;
  Weight rho_;
};

// A weight checked to be dominant for a datum at construction.
class DominantWeight {
 public:
  DominantWeight(const RootDatum& datum, Weight w);
  const Weight& weight() const { return weight_; }

 private:
  Weight weight_;
};

bool is_dominant(const RootDatum& datum, const Weight& w);

// <w, alpha^vee>; throws ShapeError if w is not integral against alpha.
std::int64_t coroot_pairing(const Weight& w, const Weight& alpha, std::int64_t alpha_norm);

Weight reflect(const Weight& w, const Weight& alpha, std::int64_t alpha_norm);

// The unique dominant weight in the Weyl orbit of w.
Weight dominant_representative(const RootDatum& datum, const Weight& w);

std::int64_t weyl_dim(const RootDatum& datum, const Weight& lambda);

std::set<Weight> weyl_orbit_weight(const RootDatum& datum, const Weight& w);

// Visits the orbit of a dominant weight level by level without a global
// visited set. The callback receives each orbit element exactly once.
template <class Fn>
void for_each_orbit_element(const RootDatum& datum, const Weight& dominant, Fn&& fn);

// Coefficients of w in the fundamental-weight basis: <w, alpha_i^vee>.
std::vector<std::int64_t> dynkin_labels(const RootDatum& datum, const Weight& w);

}  // namespace hmf

#include "hmf/detail/orbit_impl.hpp"
