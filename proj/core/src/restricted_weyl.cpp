#include "hmf/restricted_weyl.hpp"

#include "hmf/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hmf {

SignedPermutation SignedPermutation::identity(int r) {
  SignedPermutation s;
  s.perm.resize(static_cast<std::size_t>(r));
  std::iota(s.perm.begin(), s.perm.end(), 0);
  s.signs.assign(static_cast<std::size_t>(r), 1);
  return s;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& b) const {
  if (rank() != b.rank()) throw ShapeError("signed permutations of different rank");
  const SignedPermutation inv = inverse();
  SignedPermutation out;
  out.perm.resize(perm.size());
  out.signs.resize(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) out.perm[j] = perm[static_cast<std::size_t>(b.perm[j])];
  for (std::size_t i = 0; i < perm.size(); ++i)
    out.signs[i] = signs[i] * b.signs[static_cast<std::size_t>(inv.perm[i])];
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation out;
  out.perm.resize(perm.size());
  out.signs.resize(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) {
    const auto i = static_cast<std::size_t>(perm[j]);
    out.perm[i] = static_cast<int>(j);
    out.signs[j] = signs[i];
  }
  return out;
}

std::vector<SignedPermutation> generate_weyl(int r) {
  if (r < 1 || r > 8) throw ShapeError("restricted Weyl group rank must be between 1 and 8");
  std::vector<SignedPermutation> out;
  SignedPermutation s = SignedPermutation::identity(r);
  do {
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      for (int i = 0; i < r; ++i) s.signs[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : 1;
      out.push_back(s);
    }
  } while (std::next_permutation(s.perm.begin(), s.perm.end()));
  return out;
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::int64_t read_integer(const std::string& item, std::size_t& i, std::size_t pos) {
  const std::size_t begin = i;
  while (i < item.size() && is_digit(item[i])) ++i;
  try {
    return std::stoll(item.substr(begin, i - begin));
  } catch (const std::out_of_range&) {
    throw ParseError("entry out of range '" + item + "'", pos);
  }
}

// [+-] [p[/q]] [*] [x k], where '*' needs both a number and an indeterminate.
NuEntry parse_entry(const std::string& raw, std::size_t pos) {
  const auto first = raw.find_first_not_of(" \t");
  const auto last = raw.find_last_not_of(" \t");
  const std::string item = first == std::string::npos ? std::string() : raw.substr(first, last - first + 1);
  const ParseError bad("bad spectral parameter entry '" + item + "'", pos);
  std::size_t i = 0;
  bool negative = false;
  if (i < item.size() && (item[i] == '+' || item[i] == '-')) negative = item[i++] == '-';
  NuEntry e;
  e.coeff = Rational(1);
  const bool has_number = i < item.size() && is_digit(item[i]);
  if (has_number) {
    const std::int64_t num = read_integer(item, i, pos);
    std::int64_t den = 1;
    if (i < item.size() && item[i] == '/') {
      ++i;
      if (i == item.size() || !is_digit(item[i])) throw bad;
      den = read_integer(item, i, pos);
      if (den == 0) throw ParseError("zero denominator in '" + item + "'", pos);
    }
    e.coeff = Rational(num, den);
  }
  const bool star = i < item.size() && item[i] == '*';
  if (star) ++i;
  const bool has_symbol = i < item.size() && item[i] == 'x';
  if (has_symbol) {
    ++i;
    if (i == item.size() || !is_digit(item[i])) throw bad;
    const std::int64_t k = read_integer(item, i, pos);
    if (k < 1) throw ParseError("indeterminates are numbered from x1", pos);
    e.symbol = static_cast<int>(k - 1);
  }
  if (i != item.size() || (!has_number && !has_symbol) || (star && !(has_number && has_symbol))) throw bad;
  if (negative) e.coeff = -e.coeff;
  if (e.coeff == Rational(0)) e.symbol = -1;
  return e;
}

}  // namespace

Nu parse_nu(const std::string& text) {
  Nu nu;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    nu.push_back(parse_entry(text.substr(pos, comma - pos), pos));
    pos = comma + 1;
  }
  return nu;
}

std::string format_nu_entry(const NuEntry& e) {
  std::ostringstream os;
  auto rational = [&](const Rational& q) {
    os << q.numerator();
    if (q.denominator() != 1) os << '/' << q.denominator();
  };
  if (e.symbol < 0) {
    rational(e.coeff);
  } else {
    if (e.coeff == Rational(-1)) {
      os << '-';
    } else if (e.coeff != Rational(1)) {
      rational(e.coeff);
      os << '*';
    }
    os << 'x' << e.symbol + 1;
  }
  return os.str();
}

Nu act_on_nu(const SignedPermutation& s, const Nu& nu) {
  if (static_cast<int>(nu.size()) != s.rank()) throw ShapeError("spectral parameter length does not match rank");
  Nu out(nu.size());
  for (std::size_t j = 0; j < nu.size(); ++j) {
    const auto i = static_cast<std::size_t>(s.perm[j]);
    out[i] = nu[j];
    out[i].coeff *= s.signs[i];
  }
  return out;
}

std::vector<int> act_on_sigma_typeC(const HermitianPair& pair, const SignedPermutation& s,
                                    const std::vector<int>& sigma) {
  if (pair.family != Family::C && pair.family != Family::Cmp)
    throw ShapeError("the action on M-labels is only available for type C pairs, not " + pair.name());
  if (static_cast<int>(sigma.size()) != s.rank() || s.rank() != pair.n)
    throw ShapeError("label length does not match rank");
  std::vector<int> out(sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) out[static_cast<std::size_t>(s.perm[j])] = sigma[j];
  return out;
}

std::set<SpectralParameter> orbit(int r, const SpectralParameter& p, const HermitianPair* pair) {
  if (static_cast<int>(p.nu.size()) != r) throw ShapeError("spectral parameter length does not match rank");
  if (p.sigma && !pair) throw ShapeError("a sigma label needs a type C pair");
  std::set<SpectralParameter> out;
  for (const auto& s : generate_weyl(r)) {
    SpectralParameter q;
    q.nu = act_on_nu(s, p.nu);
    if (p.sigma) q.sigma = act_on_sigma_typeC(*pair, s, *p.sigma);
    out.insert(q);
  }
  return out;
}

}  // namespace hmf
