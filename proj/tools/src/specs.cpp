#include "specs.hpp"

#include "hmf/errors.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace hmf::cli {

namespace {

struct Piece {
  std::string text;
  std::size_t pos;
};

std::vector<Piece> split(const std::string& text, char sep, std::size_t base = 0) {
  std::vector<Piece> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    const std::size_t end = at == std::string::npos ? text.size() : at;
    out.push_back({text.substr(start, end - start), base + start});
    if (at == std::string::npos) break;
    start = at + 1;
  }
  return out;
}

std::int64_t parse_int(const Piece& p, const char* what) {
  std::int64_t v = 0;
  const char* first = p.text.data();
  const char* last = first + p.text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (first == last || ec != std::errc() || ptr != last)
    throw ParseError(std::string("expected ") + what + ", got '" + p.text + "'", p.pos);
  return v;
}

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

Coord to_coord(std::int64_t v, std::size_t pos) {
  if (v > (1 << 28) || v < -(1 << 28)) throw ParseError("coordinate out of range", pos);
  return static_cast<Coord>(v);
}

Weight explicit_coordinates(const RootDatum& d, const Piece& input, bool halved) {
  const int scale = d.scale();
  const std::vector<Piece> groups = split(input.text, '/', input.pos);
  const auto& factors = d.factors();
  if (groups.size() > 1 && groups.size() != factors.size())
    throw ParseError("expected " + std::to_string(factors.size()) + " '/'-separated groups for " + d.name(),
                     input.pos);
  Weight w;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const std::vector<Piece> entries = split(groups[g].text, ',', groups[g].pos);
    const std::size_t expected =
        groups.size() > 1 ? static_cast<std::size_t>(factors[g].width) : static_cast<std::size_t>(d.dim());
    if (entries.size() != expected)
      throw ParseError("expected " + std::to_string(expected) + " coordinates, got " + std::to_string(entries.size()),
                       groups[g].pos);
    for (const auto& e : entries) {
      const std::int64_t v = parse_int(e, "an integer coordinate");
      w.push_back(to_coord(halved ? v * (scale / 2) : v * scale, e.pos));
    }
  }
  return w;
}

// "[k][*]w<i>"
Weight fundamental_term(const RootDatum& d, const Piece& term) {
  const std::size_t at = term.text.find('w');
  std::string coeff = term.text.substr(0, at);
  if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
  const std::int64_t k = coeff.empty() ? 1 : parse_int({coeff, term.pos}, "a coefficient");
  const std::int64_t i = parse_int({term.text.substr(at + 1), term.pos + at + 1}, "a fundamental weight index");
  const auto& fund = d.fundamental_weights();
  if (i < 1 || i > static_cast<std::int64_t>(fund.size()))
    throw ParseError(d.name() + " has fundamental weights w1..w" + std::to_string(fund.size()), term.pos);
  if (k < 0) throw ParseError("fundamental-weight coefficients must be nonnegative", term.pos);
  return mul(k, fund[static_cast<std::size_t>(i - 1)]);
}

bool is_gl_family(Family f) { return f == Family::A || f == Family::C || f == Family::Cmp || f == Family::D; }

Weight shorthand(const HermitianPair& pair, const RootDatum& d, const Piece& term) {
  const std::size_t colon = term.text.find(':');
  const std::string kind = term.text.substr(0, colon);
  const std::int64_t k = parse_int({term.text.substr(colon + 1), term.pos + colon + 1}, "an integer");
  const Factor& main = d.factors().front();
  const int scale = d.scale();
  Weight w = d.zero();
  auto at = [&](int j) -> Coord& { return w[static_cast<std::size_t>(main.offset + j)]; };

  if (kind == "char") {
    if (is_gl_family(pair.family)) {
      for (int j = 0; j < main.width; ++j) at(j) = to_coord(k * scale, term.pos);
    } else {
      w.back() = to_coord(k * scale, term.pos);
    }
    return w;
  }
  if (pair.family == Family::E6 || pair.family == Family::E7)
    throw ParseError("'" + kind + "' needs a classical K; use fundamental weights for " + pair.name(), term.pos);
  if (k < 0) throw ParseError("'" + kind + "' needs a nonnegative argument", term.pos);
  if (kind == "ex") {
    if (k > main.width) throw ParseError("exterior power beyond the number of coordinates", term.pos);
    for (int j = 0; j < k; ++j) at(j) = to_coord(scale, term.pos);
  } else if (kind == "sym") {
    at(0) = to_coord(k * scale, term.pos);
  } else if (kind == "dual-sym") {
    if (!is_gl_family(pair.family)) throw ParseError("'dual-sym' needs a GL-type K", term.pos);
    at(main.width - 1) = to_coord(-k * scale, term.pos);
  } else {
    throw ParseError("unknown shorthand '" + kind + "'", term.pos);
  }
  return w;
}

}  // namespace

RootDatum parse_datum(const std::string& spec) {
  if (spec == "e6") return RootDatum::e6();
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("expected gl:n, so:n, sp:n, spin:n or e6, got '" + spec + "'", 0);
  const std::string kind = spec.substr(0, colon);
  const std::int64_t n = parse_int({spec.substr(colon + 1), colon + 1}, "a positive size");
  if (n < 1 || n > 64) throw ParseError("size out of range", colon + 1);
  const int size = static_cast<int>(n);
  if (kind == "gl") return RootDatum::gl(size);
  if (kind == "sp") return RootDatum::type_c(size);
  if (kind == "so" || kind == "spin") {
    if (size < 3) throw ParseError("so:n needs n >= 3", colon + 1);
    return RootDatum::so(size);
  }
  throw ParseError("unknown datum kind '" + kind + "'", 0);
}

Weight parse_weight(const RootDatum& datum, const std::string& text, bool halved) {
  if (text.find('w') == std::string::npos) return explicit_coordinates(datum, {text, 0}, halved);
  Weight w = datum.zero();
  for (const auto& term : split(text, '+')) w = add(w, fundamental_term(datum, term));
  return w;
}

KRepresentation parse_tau(const HermitianPair& pair, const std::string& text, bool halved) {
  const RootDatum d = k_datum(pair);
  Weight w = d.zero();
  for (const auto& term : split(text, '+')) {
    if (term.text.empty()) throw ParseError("empty term", term.pos);
    if (starts_with(term.text, "ex:") || starts_with(term.text, "sym:") || starts_with(term.text, "dual-sym:") ||
        starts_with(term.text, "char:")) {
      w = add(w, shorthand(pair, d, term));
    } else if (term.text.find('w') != std::string::npos) {
      w = add(w, fundamental_term(d, term));
    } else if (term.text.find(':') != std::string::npos) {
      throw ParseError("unknown shorthand '" + term.text.substr(0, term.text.find(':')) + "'", term.pos);
    } else {
      w = add(w, explicit_coordinates(d, term, halved));
    }
  }
  return {w};
}

TauSpec tau_spec(const HermitianPair& pair, const KRepresentation& tau) {
  const RootDatum d = k_datum(pair);
  std::ostringstream os;
  if (d.scale() != 2) {
    const auto labels = dynkin_labels(d, tau.highest);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == 0) continue;
      if (labels[i] != 1) os << labels[i];
      os << 'w' << i + 1 << '+';
    }
    os << "char:" << tau.highest.back() / d.scale();
    return {os.str(), false};
  }
  bool all_even = true;
  for (Coord c : tau.highest) all_even = all_even && c % 2 == 0;
  const auto& factors = d.factors();
  for (std::size_t f = 0; f < factors.size(); ++f) {
    if (f) os << '/';
    for (int j = 0; j < factors[f].width; ++j) {
      if (j) os << ',';
      const Coord c = tau.highest[static_cast<std::size_t>(factors[f].offset + j)];
      os << (all_even ? c / 2 : c);
    }
  }
  return {os.str(), !all_even};
}

std::string key_string(const Weight& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  return os.str();
}

}  // namespace hmf::cli
