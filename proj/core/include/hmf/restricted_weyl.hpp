#pragma once

#include "hmf/pairs.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hmf {

// Element of the hyperoctahedral group: e_j -> signs[perm[j]] * e_{perm[j]}.
// Indices are 0-based.
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> signs;

  static SignedPermutation identity(int r);
  int rank() const { return static_cast<int>(perm.size()); }
  // (a * b) . v = a . (b . v)
  SignedPermutation operator*(const SignedPermutation& b) const;
  SignedPermutation inverse() const;
  bool operator==(const SignedPermutation&) const = default;
  bool operator<(const SignedPermutation& o) const {
    return perm != o.perm ? perm < o.perm : signs < o.signs;
  }
};

// All 2^r r! elements; r must be between 1 and 8.
std::vector<SignedPermutation> generate_weyl(int r);

// An exact rational, or a rational multiple of the indeterminate x_symbol
// (symbol >= 0).
struct NuEntry {
  Rational coeff{0};
  int symbol = -1;
  bool operator==(const NuEntry&) const = default;
  bool operator<(const NuEntry& o) const { return symbol != o.symbol ? symbol < o.symbol : coeff < o.coeff; }
};

using Nu = std::vector<NuEntry>;

// Comma-separated entries: integers, fractions p/q, or x1, -x2, 3/2*x3
// (indeterminates numbered from 1).
Nu parse_nu(const std::string& text);
std::string format_nu_entry(const NuEntry& e);

// (s . nu)_i = signs_i * nu_{perm^-1(i)}
Nu act_on_nu(const SignedPermutation& s, const Nu& nu);

// Labels of M = Z_2^n (type C) or its metaplectic preimage: the permutation
// part moves coordinates, sign changes act trivially.
std::vector<int> act_on_sigma_typeC(const HermitianPair& pair, const SignedPermutation& s,
                                    const std::vector<int>& sigma);

struct SpectralParameter {
  std::optional<std::vector<int>> sigma;
  Nu nu;
  bool operator==(const SpectralParameter&) const = default;
  bool operator<(const SpectralParameter& o) const {
    return sigma != o.sigma ? sigma < o.sigma : nu < o.nu;
  }
};

// Joint orbit of (sigma, nu). A sigma label requires a type C pair.
std::set<SpectralParameter> orbit(int r, const SpectralParameter& p, const HermitianPair* pair = nullptr);

}  // namespace hmf
