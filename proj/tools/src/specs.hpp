#pragma once

#include "hmf/pairs.hpp"
#include "hmf/root_datum.hpp"

#include <string>

namespace hmf::cli {

// "gl:n", "so:n", "sp:n", "spin:n" (same datum as so:n) or "e6".
RootDatum parse_datum(const std::string& spec);

// Either explicit coordinates or a sum of fundamental-weight terms.
//
// Explicit coordinates are comma-separated integers; '/' may separate the
// slices of the datum's factors and is then checked against their widths.
// Entries are plain coordinates, or halves of them when `halved` is set.
//
// Fundamental-weight terms look like "w1", "2w3" or "w1+w6"; the index runs
// over datum.fundamental_weights() starting from 1.
Weight parse_weight(const RootDatum& datum, const std::string& text, bool halved);

// A weight spec extended by shorthands tied to the pair, joined with '+':
//   ex:j        exterior power of the defining representation
//   sym:m       symmetric power
//   dual-sym:m  dual of the symmetric power (GL-type K only)
//   char:k      k-th power of the basic character of K
// "char:k" is det^k on the first GL factor for types A, C, Cmp and D, and
// the plain central coordinate k for the other families.
KRepresentation parse_tau(const HermitianPair& pair, const std::string& text, bool halved);

// A tau spec that parse_tau reads back to the same weight, together with
// whether it needs --halved.
struct TauSpec {
  std::string text;
  bool halved = false;
};
TauSpec tau_spec(const HermitianPair& pair, const KRepresentation& tau);

// Scaled coordinates joined by commas, e.g. "2,0,-2".
std::string key_string(const Weight& w);

}  // namespace hmf::cli
