#include "hmf/pairs.hpp"

#include "hmf/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <regex>
#include <set>
#include <sstream>

namespace hmf {

namespace {

using Row = std::vector<std::int64_t>;

Row unit_row(int dim, int i, std::int64_t value = 1) {
  Row r(static_cast<std::size_t>(dim), 0);
  r[static_cast<std::size_t>(i)] = value;
  return r;
}

int mod(std::int64_t a, int m) { return static_cast<int>(((a % m) + m) % m); }

bool all_zero(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](Coord x) { return x == 0; });
}

std::size_t distinct_values(const Weight& w) { return std::set<Coord>(w.begin(), w.end()).size(); }

// Normalized GL weights (last entry 0) of the form (m, 0, ..., 0),
// (m, ..., m, 0) or (1, ..., 1, 0, ..., 0), doubled.
bool symmetric_power(const Weight& w) {
  return std::all_of(w.begin() + 1, w.end(), [](Coord x) { return x == 0; });
}

bool dual_symmetric_power(const Weight& w) {
  return std::all_of(w.begin(), w.end() - 1, [&](Coord x) { return x == w[0]; }) && w.back() == 0;
}

bool exterior_power(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](Coord x) { return x == 0 || x == 2; });
}

bool same_parity(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [&](Coord x) { return mod(x - w[0], 2) == 0; });
}

bool all_even(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](Coord x) { return mod(x, 2) == 0; });
}

// (a, ..., a, +-a) in doubled coordinates.
bool equal_moduli(const Weight& mu) {
  return std::all_of(mu.begin(), mu.end(), [&](Coord x) { return std::abs(x) == mu[0]; });
}

int r_of(const HermitianPair& p) { return p.n - p.b; }

void require_valid(const HermitianPair& pair, const KRepresentation& tau) {
  if (!k_rep_valid(pair, tau))
    throw ShapeError(format_scaled(tau.highest) + " is not a valid representation of K for " + pair.name());
}

}  // namespace

HermitianPair HermitianPair::type_a(int r, int b) {
  if (r < 1 || b < 0) throw ShapeError("type A needs r >= 1 and b >= 0");
  return {Family::A, r + b, b};
}

HermitianPair HermitianPair::type_c(int n) {
  if (n < 1) throw ShapeError("type C needs n >= 1");
  return {Family::C, n, 0};
}

HermitianPair HermitianPair::type_cmp(int n) {
  if (n < 1) throw ShapeError("type Cmp needs n >= 1");
  return {Family::Cmp, n, 0};
}

HermitianPair HermitianPair::type_d(int n) {
  if (n < 2) throw ShapeError("type D needs n >= 2");
  return {Family::D, n, 0};
}

HermitianPair HermitianPair::type_bd(int n) {
  if (n < 5) throw ShapeError("type BD needs n >= 5");
  return {Family::BD, n, 0};
}

HermitianPair HermitianPair::type_bdspin(int n) {
  if (n < 5) throw ShapeError("type BDspin needs n >= 5");
  return {Family::BDspin, n, 0};
}

HermitianPair HermitianPair::e6() { return {Family::E6, 0, 0}; }
HermitianPair HermitianPair::e7() { return {Family::E7, 0, 0}; }

HermitianPair HermitianPair::parse(const std::string& spec) {
  static const std::regex a_re(R"(A:r=(\d+),b=(\d+))");
  static const std::regex sized_re(R"((C|Cmp|D|BD|BDspin):(\d+))");
  std::smatch m;
  try {
    if (std::regex_match(spec, m, a_re)) return type_a(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(spec, m, sized_re)) {
      const std::string fam = m[1];
      const int n = std::stoi(m[2]);
      if (fam == "C") return type_c(n);
      if (fam == "Cmp") return type_cmp(n);
      if (fam == "D") return type_d(n);
      if (fam == "BD") return type_bd(n);
      return type_bdspin(n);
    }
  } catch (const std::out_of_range&) {
    throw ParseError("pair size out of range in '" + spec + "'", 0);
  }
  if (spec == "E6") return e6();
  if (spec == "E7") return e7();
  throw ParseError("unrecognized pair '" + spec + "'", 0);
}

int HermitianPair::rank() const {
  switch (family) {
    case Family::A: return r_of(*this);
    case Family::C:
    case Family::Cmp: return n;
    case Family::D: return n / 2;
    case Family::BD:
    case Family::BDspin:
    case Family::E6: return 2;
    case Family::E7: return 3;
  }
  return 0;
}

std::string HermitianPair::name() const {
  switch (family) {
    case Family::A: return "A:r=" + std::to_string(r_of(*this)) + ",b=" + std::to_string(b);
    case Family::C: return "C:" + std::to_string(n);
    case Family::Cmp: return "Cmp:" + std::to_string(n);
    case Family::D: return "D:" + std::to_string(n);
    case Family::BD: return "BD:" + std::to_string(n);
    case Family::BDspin: return "BDspin:" + std::to_string(n);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
  }
  return {};
}

RootDatum k_datum(const HermitianPair& pair) {
  switch (pair.family) {
    case Family::A: return RootDatum::gl(pair.n) + RootDatum::gl(r_of(pair));
    case Family::C:
    case Family::Cmp:
    case Family::D: return RootDatum::gl(pair.n);
    case Family::BD:
    case Family::BDspin: return RootDatum::so(pair.n) + RootDatum::torus(1);
    case Family::E6: return RootDatum::type_d(5) + RootDatum::torus(1);
    case Family::E7: return RootDatum::e6() + RootDatum::torus(1);
  }
  return {};
}

MModel build_m_model(const HermitianPair& pair) {
  MModel m;
  const int kdim = k_datum(pair).dim();
  m.torus_map.source_dim = kdim;
  switch (pair.family) {
    case Family::A: {
      // M = {(d, C; d)}: the torus exponent of d_j is x_j + y_j, C sees the
      // middle block of U(r + b). Determinant one in S(U x U) kills
      // (e, w) -> (e + 2, w + 1).
      const int r = r_of(pair);
      m.reductive = pair.b > 0 ? RootDatum::torus(r) + RootDatum::gl(pair.b) : RootDatum::torus(r);
      for (int j = 0; j < r; ++j) {
        Row row = unit_row(kdim, j);
        row[static_cast<std::size_t>(pair.n + j)] = 1;
        m.torus_map.matrix.push_back(row);
      }
      for (int i = 0; i < pair.b; ++i) m.torus_map.matrix.push_back(unit_row(kdim, r + i));
      Weight gen;
      for (int j = 0; j < r; ++j) gen.push_back(4);
      for (int i = 0; i < pair.b; ++i) gen.push_back(2);
      m.identification = LatticeIdentification{gen, gen.size() - 1};
      break;
    }
    case Family::C:
    case Family::Cmp: {
      // M = diagonal +-1 matrices (or their preimage in the metaplectic cover).
      m.reductive = RootDatum();
      for (int i = 0; i < pair.n; ++i) {
        LabelFunctional l;
        l.coeffs = unit_row(kdim, i);
        if (pair.family == Family::C) {
          l.denominator = 2;
          l.modulus = 2;
        } else {
          l.modulus = 4;
        }
        m.finite_labels.push_back(l);
      }
      break;
    }
    case Family::D: {
      // SU(2)^r on consecutive coordinate pairs, plus U(1) on the last
      // coordinate when n is odd.
      const int r = pair.n / 2;
      std::vector<RootDatum> parts(static_cast<std::size_t>(r), RootDatum::gl(2));
      if (pair.n % 2) parts.push_back(RootDatum::torus(1));
      m.reductive = RootDatum::direct_sum(parts);
      m.torus_map.denominator = 2;
      for (int j = 0; j < r; ++j) {
        Row row = unit_row(kdim, 2 * j);
        row[static_cast<std::size_t>(2 * j + 1)] = -1;
        m.torus_map.matrix.push_back(row);
        for (auto& x : row) x = -x;
        m.torus_map.matrix.push_back(row);
      }
      if (pair.n % 2) m.torus_map.matrix.push_back(unit_row(kdim, pair.n - 1, 2));
      break;
    }
    case Family::BD:
    case Family::BDspin: {
      // M = SO(n - 2) on rotation planes 2..k, times the element acting as a
      // half-turn in plane 1 and in SO(2) (order 4 in the spin cover).
      const int k = pair.n / 2;
      m.reductive = RootDatum::so(pair.n - 2);
      for (int i = 1; i < k; ++i) m.torus_map.matrix.push_back(unit_row(kdim, i));
      LabelFunctional l;
      l.coeffs = unit_row(kdim, 0);
      l.coeffs[static_cast<std::size_t>(k)] = 1;
      l.modulus = 4;
      m.finite_labels.push_back(l);
      break;
    }
    case Family::E6: {
      // t_M is the annihilator of the two strongly orthogonal weights of p+,
      // (-1,-1,-1,-1,1; 2) and (-1,1,1,1,-1; 2) doubled. The semisimple part is
      // the A3 = D3 spanned by alpha_2, alpha_3, alpha_5 of D5, written in D3
      // coordinates; the last row is the torus H = -x_1 - n/2.
      m.reductive = RootDatum::type_d(3) + RootDatum::torus(1);
      m.torus_map.denominator = 2;
      m.torus_map.matrix = {{0, 1, 1, -1, 1, 0}, {0, 1, -1, 1, 1, 0}, {0, -1, 1, 1, 1, 0}, {-2, 0, 0, 0, 0, -1}};
      break;
    }
    case Family::E7: {
      // D4 on the first four coordinates of the E6 realization; scale 6 -> 2.
      m.reductive = RootDatum::type_d(4);
      m.torus_map.denominator = 3;
      for (int i = 0; i < 4; ++i) m.torus_map.matrix.push_back(unit_row(kdim, i));
      break;
    }
  }
  m.torus_map.target_dim = m.reductive.dim();
  return m;
}

bool k_rep_valid(const HermitianPair& pair, const KRepresentation& tau) {
  const RootDatum k = k_datum(pair);
  const Weight& w = tau.highest;
  if (static_cast<int>(w.size()) != k.dim()) return false;
  try {
    if (!is_dominant(k, w)) return false;
  } catch (const ShapeError&) {
    return false;
  }
  switch (pair.family) {
    case Family::A:
    case Family::C:
    case Family::D: return all_even(w);
    case Family::Cmp: return same_parity(w);
    case Family::BD: return all_even(w);
    case Family::BDspin: {
      const Weight mu = slice(w, 0, w.size() - 1);
      return same_parity(mu) && mod(mu[0] + w.back(), 2) == 0;
    }
    case Family::E6: {
      const Weight mu = slice(w, 0, 5);
      const Coord big_n = w.back();
      if (!same_parity(mu) || mod(big_n, 2) != 0) return false;
      std::int64_t sum = 0;
      for (auto x : mu) sum += x;
      return mod(sum - big_n / 2, 4) == 0;
    }
    case Family::E7: return mod(w.back(), 6) == 0;
  }
  return false;
}

KRepresentation normalize(const HermitianPair& pair, const KRepresentation& tau) {
  require_valid(pair, tau);
  Weight w = tau.highest;
  auto shift_block = [&](std::size_t offset, std::size_t len, Coord delta) {
    for (std::size_t i = offset; i < offset + len; ++i) w[i] = static_cast<Coord>(w[i] - delta);
  };
  switch (pair.family) {
    case Family::A: {
      const auto n = static_cast<std::size_t>(pair.n);
      const auto r = static_cast<std::size_t>(r_of(pair));
      shift_block(0, n, w[n - 1]);
      shift_block(n, r, w[n + r - 1]);
      break;
    }
    case Family::C:
    case Family::D: shift_block(0, w.size(), w.back()); break;
    case Family::Cmp: shift_block(0, w.size(), static_cast<Coord>(w.back() - mod(w.back(), 2))); break;
    case Family::BD:
    case Family::BDspin: w.back() = static_cast<Coord>(mod(w.back(), 2)); break;
    case Family::E6: w.back() = static_cast<Coord>(mod(w.back(), 8)); break;
    case Family::E7: w.back() = 0; break;
  }
  return {w};
}

bool theorem_list_contains(const HermitianPair& pair, const KRepresentation& tau) {
  const Weight w = normalize(pair, tau).highest;
  switch (pair.family) {
    case Family::A: {
      const int r = r_of(pair);
      const Weight mu = slice(w, 0, static_cast<std::size_t>(pair.n));
      const Weight nu = slice(w, static_cast<std::size_t>(pair.n), static_cast<std::size_t>(r));
      if (r == 1) return true;
      if (r == 2) return all_zero(mu) || (all_zero(nu) && distinct_values(mu) <= 2);
      auto small = [](const Weight& v) { return symmetric_power(v) || dual_symmetric_power(v) || exterior_power(v); };
      return (all_zero(mu) && small(nu)) || (all_zero(nu) && small(mu));
    }
    case Family::C: return exterior_power(w);
    case Family::Cmp: {
      Weight v = w;
      for (auto& x : v) x = static_cast<Coord>(x - w.back());
      return exterior_power(v);
    }
    case Family::D: return symmetric_power(w) || dual_symmetric_power(w);
    case Family::BD:
    case Family::BDspin: {
      const Weight mu = slice(w, 0, w.size() - 1);
      if (pair.n % 2 == 0) return equal_moduli(mu);
      if (all_zero(mu)) return true;
      return pair.family == Family::BDspin && std::all_of(mu.begin(), mu.end(), [](Coord x) { return x == 1; });
    }
    case Family::E6: {
      const Weight mu = slice(w, 0, 5);
      return all_zero(mu) || mu == make_weight({1, 1, 1, 1, 1}) || mu == make_weight({1, 1, 1, 1, -1});
    }
    case Family::E7: return all_zero(slice(w, 0, 8));
  }
  return false;
}

// Restricted root multiplicities from the Peirce decomposition of p+ with
// respect to a frame of r tripotents: V_ij (i < j) has complex dimension
// mult(e_i +- e_j), V_i0 has complex dimension mult(e_i) / 2, V_ii = C.
RootMultiplicities restricted_root_multiplicities(const HermitianPair& pair) {
  switch (pair.family) {
    case Family::A: return {2, 2 * pair.b, 1};           // V_ij = C^2, V_i0 = C^b
    case Family::C:
    case Family::Cmp: return {1, 0, 1};                  // symmetric matrices
    case Family::D: return {4, pair.n % 2 ? 4 : 0, 1};   // skew matrices in 2x2 blocks
    case Family::BD:
    case Family::BDspin: return {pair.n - 2, 0, 1};      // V_12 = C^{n-2}
    case Family::E6: return {6, 8, 1};                   // V_12 = C^6, V_10 + V_20 = C^4 + C^4
    case Family::E7: return {8, 0, 1};                   // V_ij = C^8
  }
  return {};
}

int dim_p(const HermitianPair& pair) {
  switch (pair.family) {
    case Family::A: return 2 * r_of(pair) * pair.n;
    case Family::C:
    case Family::Cmp: return pair.n * (pair.n + 1);
    case Family::D: return pair.n * (pair.n - 1);
    case Family::BD:
    case Family::BDspin: return 2 * pair.n;
    case Family::E6: return 32;
    case Family::E7: return 54;
  }
  return 0;
}

std::vector<Rational> rho_a(const HermitianPair& pair) {
  const RootMultiplicities m = restricted_root_multiplicities(pair);
  const int r = pair.rank();
  std::vector<Rational> rho;
  for (int i = 1; i <= r; ++i) rho.emplace_back(Rational(m.pair * (r - i)) + Rational(m.single, 2) + Rational(m.twice));
  return rho;
}

RestrictedWeylData restricted_weyl_data(const HermitianPair& pair) {
  return {pair.rank(), restricted_root_multiplicities(pair).single > 0 ? RestrictedType::BC : RestrictedType::C};
}

std::string format_krep(const HermitianPair& pair, const KRepresentation& tau) {
  const RootDatum k = k_datum(pair);
  std::ostringstream os;
  bool first = true;
  for (const auto& f : k.factors()) {
    if (!first) os << " x ";
    first = false;
    const Weight part = slice(tau.highest, static_cast<std::size_t>(f.offset), static_cast<std::size_t>(f.width));
    if (f.type == FactorType::Torus) {
      os << "chi" << format_plain(part, k.scale());
    } else {
      os << format_plain(part, k.scale());
    }
  }
  return os.str();
}

}  // namespace hmf
