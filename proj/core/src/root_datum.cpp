#include "hmf/root_datum.hpp"

#include "hmf/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>

namespace hmf {

namespace {

using Half = std::vector<std::int64_t>;  // coordinates in units of 1/2

Half unit(int width, int i, std::int64_t v = 2) {
  Half h(static_cast<std::size_t>(width), 0);
  h[static_cast<std::size_t>(i)] = v;
  return h;
}

Half plus(Half a, const Half& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Half minus(Half a, const Half& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

struct FactorRoots {
  std::vector<Half> simple;
  std::vector<Half> positive;
  std::vector<Half> fundamental;
};

// e_i - e_j, e_i + e_j for i < j
void add_pm_pairs(int k, std::vector<Half>& out) {
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      out.push_back(minus(unit(k, i), unit(k, j)));
      out.push_back(plus(unit(k, i), unit(k, j)));
    }
}

Half prefix_sum(int width, int i) {
  Half h(static_cast<std::size_t>(width), 0);
  for (int t = 0; t < i; ++t) h[static_cast<std::size_t>(t)] = 2;
  return h;
}

FactorRoots classical_roots(FactorType type, int k, int width) {
  FactorRoots f;
  switch (type) {
    case FactorType::A: {
      const int n = width;
      for (int i = 0; i + 1 < n; ++i) f.simple.push_back(minus(unit(n, i), unit(n, i + 1)));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) f.positive.push_back(minus(unit(n, i), unit(n, j)));
      for (int i = 1; i < n; ++i) f.fundamental.push_back(prefix_sum(n, i));
      break;
    }
    case FactorType::B: {
      for (int i = 0; i + 1 < k; ++i) f.simple.push_back(minus(unit(k, i), unit(k, i + 1)));
      if (k >= 1) f.simple.push_back(unit(k, k - 1));
      add_pm_pairs(k, f.positive);
      for (int i = 0; i < k; ++i) f.positive.push_back(unit(k, i));
      for (int i = 1; i < k; ++i) f.fundamental.push_back(prefix_sum(k, i));
      if (k >= 1) f.fundamental.push_back(Half(static_cast<std::size_t>(k), 1));
      break;
    }
    case FactorType::C: {
      for (int i = 0; i + 1 < k; ++i) f.simple.push_back(minus(unit(k, i), unit(k, i + 1)));
      if (k >= 1) f.simple.push_back(unit(k, k - 1, 4));
      add_pm_pairs(k, f.positive);
      for (int i = 0; i < k; ++i) f.positive.push_back(unit(k, i, 4));
      for (int i = 1; i <= k; ++i) f.fundamental.push_back(prefix_sum(k, i));
      break;
    }
    case FactorType::D: {
      if (k >= 2) {
        for (int i = 0; i + 1 < k; ++i) f.simple.push_back(minus(unit(k, i), unit(k, i + 1)));
        f.simple.push_back(plus(unit(k, k - 2), unit(k, k - 1)));
        add_pm_pairs(k, f.positive);
        for (int i = 1; i <= k - 2; ++i) f.fundamental.push_back(prefix_sum(k, i));
        Half half_minus(static_cast<std::size_t>(k), 1);
        half_minus[static_cast<std::size_t>(k - 1)] = -1;
        f.fundamental.push_back(half_minus);
        f.fundamental.push_back(Half(static_cast<std::size_t>(k), 1));
      }
      break;
    }
    case FactorType::E6: {
      // Simple roots in Bourbaki order.
      f.simple.push_back(Half{1, -1, -1, -1, -1, -1, -1, 1});
      f.simple.push_back(plus(unit(8, 0), unit(8, 1)));
      f.simple.push_back(minus(unit(8, 1), unit(8, 0)));
      f.simple.push_back(minus(unit(8, 2), unit(8, 1)));
      f.simple.push_back(minus(unit(8, 3), unit(8, 2)));
      f.simple.push_back(minus(unit(8, 4), unit(8, 3)));
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < i; ++j) {
          f.positive.push_back(plus(unit(8, i), unit(8, j)));
          f.positive.push_back(minus(unit(8, i), unit(8, j)));
        }
      for (int mask = 0; mask < 32; ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
        Half h(8, 0);
        for (int i = 0; i < 5; ++i) h[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
        h[5] = -1;
        h[6] = -1;
        h[7] = 1;
        f.positive.push_back(h);
      }
      // Fundamental weights, here in units of 1/6 (converted below): with
      // u = e8 - e6 - e7 they are 2/3 u, (1/2)(1,1,1,1,1,-1,-1,1),
      // (-1/2,1/2,1/2,1/2,1/2) + 5/6 u, (0,0,1,1,1) + u, (0,0,0,1,1) + 2/3 u,
      // (0,0,0,0,1) + 1/3 u.
      break;
    }
    case FactorType::Torus:
      break;
  }
  return f;
}

const std::vector<std::vector<std::int64_t>> kE6FundamentalSixths = {
    {0, 0, 0, 0, 0, -4, -4, 4}, {3, 3, 3, 3, 3, -3, -3, 3}, {-3, 3, 3, 3, 3, -5, -5, 5},
    {0, 0, 6, 6, 6, -6, -6, 6}, {0, 0, 0, 6, 6, -4, -4, 4}, {0, 0, 0, 0, 6, -2, -2, 2}};

Weight embed(const Half& h, int offset, int dim, int scale) {
  Weight w(static_cast<std::size_t>(dim), 0);
  for (std::size_t i = 0; i < h.size(); ++i)
    w[static_cast<std::size_t>(offset) + i] = static_cast<Coord>(h[i] * (scale / 2));
  return w;
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Factor make_factor(FactorType t, int rank, int width) { return Factor{t, rank, 0, width}; }

}  // namespace

RootDatum::RootDatum() { build(); }

RootDatum RootDatum::gl(int n) {
  if (n < 1) throw ShapeError("gl(n) requires n >= 1");
  RootDatum d;
  d.factors_ = {make_factor(FactorType::A, n - 1, n)};
  d.build();
  return d;
}

RootDatum RootDatum::type_b(int k) {
  if (k < 0) throw ShapeError("type B rank must be nonnegative");
  RootDatum d;
  if (k > 0) d.factors_ = {make_factor(FactorType::B, k, k)};
  d.build();
  return d;
}

RootDatum RootDatum::type_c(int k) {
  if (k < 1) throw ShapeError("type C rank must be positive");
  RootDatum d;
  d.factors_ = {make_factor(FactorType::C, k, k)};
  d.build();
  return d;
}

RootDatum RootDatum::type_d(int k) {
  if (k < 1) throw ShapeError("type D rank must be positive");
  if (k == 1) return torus(1);
  RootDatum d;
  d.factors_ = {make_factor(FactorType::D, k, k)};
  d.build();
  return d;
}

RootDatum RootDatum::so(int n) {
  if (n < 1) throw ShapeError("so(n) requires n >= 1");
  return n % 2 ? type_b(n / 2) : type_d(n / 2);
}

RootDatum RootDatum::e6() {
  RootDatum d;
  d.factors_ = {make_factor(FactorType::E6, 6, 8)};
  d.build();
  return d;
}

RootDatum RootDatum::torus(int k) {
  if (k < 0) throw ShapeError("torus dimension must be nonnegative");
  RootDatum d;
  if (k > 0) d.factors_ = {make_factor(FactorType::Torus, k, k)};
  d.build();
  return d;
}

RootDatum RootDatum::direct_sum(const std::vector<RootDatum>& parts) {
  RootDatum d;
  for (const auto& p : parts)
    for (const auto& f : p.factors_) d.factors_.push_back(f);
  d.build();
  return d;
}

void RootDatum::build() {
  dim_ = 0;
  scale_ = 2;
  for (auto& f : factors_) {
    f.offset = dim_;
    dim_ += f.width;
    if (f.type == FactorType::E6) scale_ = 6;
  }
  simple_.clear();
  positive_.clear();
  fundamental_.clear();
  for (const auto& f : factors_) {
    FactorRoots fr = classical_roots(f.type, f.rank, f.width);
    for (const auto& h : fr.simple) simple_.push_back(embed(h, f.offset, dim_, scale_));
    for (const auto& h : fr.positive) positive_.push_back(embed(h, f.offset, dim_, scale_));
    if (f.type == FactorType::E6) {
      for (const auto& sixths : kE6FundamentalSixths) {
        Weight w(static_cast<std::size_t>(dim_), 0);
        for (std::size_t i = 0; i < 8; ++i)
          w[static_cast<std::size_t>(f.offset) + i] = static_cast<Coord>(sixths[i] * scale_ / 6);
        fundamental_.push_back(w);
      }
    } else {
      for (const auto& h : fr.fundamental) fundamental_.push_back(embed(h, f.offset, dim_, scale_));
    }
  }
  simple_norms_.clear();
  for (const auto& a : simple_) simple_norms_.push_back(dot(a, a));
  rho_ = zero();
  Weight twice_rho = zero();
  for (const auto& a : positive_) twice_rho = add(twice_rho, a);
  for (std::size_t i = 0; i < twice_rho.size(); ++i) {
    if (twice_rho[i] % 2 != 0) throw ShapeError("rho is not representable at this scale");
    rho_[i] = twice_rho[i] / 2;
  }
}

std::vector<int> RootDatum::fundamental_counts() const {
  std::vector<int> c;
  for (const auto& f : factors_) {
    if (f.type == FactorType::Torus)
      c.push_back(0);
    else if (f.type == FactorType::D && f.rank < 2)
      c.push_back(0);
    else
      c.push_back(f.rank);
  }
  return c;
}

std::int64_t RootDatum::weyl_group_order() const {
  std::int64_t order = 1;
  for (const auto& f : factors_) {
    switch (f.type) {
      case FactorType::A:
        order *= factorial(f.rank + 1);
        break;
      case FactorType::B:
      case FactorType::C:
        order *= (std::int64_t{1} << f.rank) * factorial(f.rank);
        break;
      case FactorType::D:
        order *= (std::int64_t{1} << (f.rank - 1)) * factorial(f.rank);
        break;
      case FactorType::E6:
        order *= 51840;
        break;
      case FactorType::Torus:
        break;
    }
  }
  return order;
}

std::string RootDatum::name() const {
  if (factors_.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "+";
    const auto& f = factors_[i];
    switch (f.type) {
      case FactorType::A:
        s += "gl(" + std::to_string(f.width) + ")";
        break;
      case FactorType::B:
        s += "B" + std::to_string(f.rank);
        break;
      case FactorType::C:
        s += "C" + std::to_string(f.rank);
        break;
      case FactorType::D:
        s += "D" + std::to_string(f.rank);
        break;
      case FactorType::E6:
        s += "E6";
        break;
      case FactorType::Torus:
        s += "T" + std::to_string(f.rank);
        break;
    }
  }
  return s;
}

void RootDatum::check_shape(const Weight& w) const {
  if (static_cast<int>(w.size()) != dim_)
    throw ShapeError("weight has " + std::to_string(w.size()) + " coordinates, datum " + name() +
                     " expects " + std::to_string(dim_));
}

bool RootDatum::operator==(const RootDatum& other) const {
  if (factors_.size() != other.factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& a = factors_[i];
    const auto& b = other.factors_[i];
    if (a.type != b.type || a.rank != b.rank || a.width != b.width) return false;
  }
  return true;
}

DominantWeight::DominantWeight(const RootDatum& datum, Weight w) : weight_(std::move(w)) {
  if (!is_dominant(datum, weight_)) throw ShapeError("weight " + format_scaled(weight_) + " is not dominant");
}

bool is_dominant(const RootDatum& datum, const Weight& w) {
  datum.check_shape(w);
  for (const auto& a : datum.simple_roots())
    if (dot(w, a) < 0) return false;
  return true;
}

std::int64_t coroot_pairing(const Weight& w, const Weight& alpha, std::int64_t alpha_norm) {
  const std::int64_t num = 2 * dot(w, alpha);
  if (num % alpha_norm != 0)
    throw ShapeError("weight " + format_scaled(w) + " is not integral against root " + format_scaled(alpha));
  return num / alpha_norm;
}

Weight reflect(const Weight& w, const Weight& alpha, std::int64_t alpha_norm) {
  const std::int64_t c = coroot_pairing(w, alpha, alpha_norm);
  Weight r(w);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<Coord>(r[i] - c * alpha[i]);
  return r;
}

Weight dominant_representative(const RootDatum& datum, const Weight& w) {
  datum.check_shape(w);
  const auto& simple = datum.simple_roots();
  const auto& norms = datum.simple_root_norms();
  Weight cur(w);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < simple.size(); ++i) {
      if (dot(cur, simple[i]) < 0) {
        cur = reflect(cur, simple[i], norms[i]);
        changed = true;
      }
    }
  }
  return cur;
}

std::int64_t weyl_dim(const RootDatum& datum, const Weight& lambda) {
  if (!is_dominant(datum, lambda)) throw ShapeError("weyl_dim requires a dominant weight");
  using boost::multiprecision::cpp_int;
  cpp_int num = 1;
  cpp_int den = 1;
  const Weight lr = add(lambda, datum.rho());
  for (const auto& a : datum.positive_roots()) {
    num *= dot(lr, a);
    den *= dot(datum.rho(), a);
  }
  if (num % den != 0) throw ShapeError("Weyl dimension is not an integer; weight outside the lattice");
  cpp_int q = num / den;
  if (q > std::numeric_limits<std::int64_t>::max()) throw ResourceError("dimension overflows 64 bits", -1);
  return q.convert_to<std::int64_t>();
}

std::set<Weight> weyl_orbit_weight(const RootDatum& datum, const Weight& w) {
  std::set<Weight> out;
  for_each_orbit_element(datum, dominant_representative(datum, w), [&](const Weight& x) { out.insert(x); });
  return out;
}

std::vector<std::int64_t> dynkin_labels(const RootDatum& datum, const Weight& w) {
  datum.check_shape(w);
  std::vector<std::int64_t> out;
  const auto& simple = datum.simple_roots();
  for (std::size_t i = 0; i < simple.size(); ++i)
    out.push_back(coroot_pairing(w, simple[i], datum.simple_root_norms()[i]));
  return out;
}

}  // namespace hmf
