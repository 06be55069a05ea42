#include "hmf/weight.hpp"

#include "hmf/errors.hpp"

#include <numeric>
#include <sstream>

namespace hmf {

Weight scaled(const std::vector<std::int64_t>& plain, int scale) {
  Weight w;
  w.reserve(plain.size());
  for (auto x : plain) w.push_back(static_cast<Coord>(x * scale));
  return w;
}

std::int64_t dot(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw ShapeError("inner product of weights with different lengths");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::int64_t>(a[i]) * b[i];
  return s;
}

Weight add(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw ShapeError("sum of weights with different lengths");
  Weight r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Weight sub(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw ShapeError("difference of weights with different lengths");
  Weight r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Weight mul(std::int64_t k, const Weight& a) {
  Weight r(a);
  for (auto& x : r) x = static_cast<Coord>(k * x);
  return r;
}

Weight concat(const Weight& a, const Weight& b) {
  Weight r(a);
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Weight slice(const Weight& w, std::size_t offset, std::size_t length) {
  if (offset + length > w.size()) throw ShapeError("weight slice out of range");
  return Weight(w.begin() + static_cast<std::ptrdiff_t>(offset),
                w.begin() + static_cast<std::ptrdiff_t>(offset + length));
}

std::string format_plain(const Weight& w, int scale) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    std::int64_t g = std::gcd(static_cast<std::int64_t>(w[i]), static_cast<std::int64_t>(scale));
    if (g == 0) g = scale;
    std::int64_t num = w[i] / g;
    std::int64_t den = scale / g;
    if (den == 1)
      os << num;
    else
      os << num << '/' << den;
  }
  os << ')';
  return os.str();
}

std::string format_scaled(const Weight& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ']';
  return os.str();
}

}  // namespace hmf
