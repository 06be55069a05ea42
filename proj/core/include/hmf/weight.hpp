#pragma once

#include <boost/container/small_vector.hpp>
#include <boost/container_hash/hash.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hmf {

using Coord = std::int32_t;

// Coordinates of a weight in the ambient orthonormal basis, multiplied by
// the owning datum's scale (2 for classical data, 6 when an E6 factor is
// present). Integral scaled coordinates make half-integer spin weights and
// the thirds of the E6 weight lattice exact.
using Weight = boost::container::small_vector<Coord, 10>;

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    return boost::hash_range(w.begin(), w.end());
  }
};

inline Weight make_weight(std::initializer_list<Coord> c) { return Weight(c.begin(), c.end()); }

inline Weight make_weight(const std::vector<Coord>& c) { return Weight(c.begin(), c.end()); }

// Plain integer coordinates times the scale.
Weight scaled(const std::vector<std::int64_t>& plain, int scale);

std::int64_t dot(const Weight& a, const Weight& b);

Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
Weight mul(std::int64_t k, const Weight& a);
Weight concat(const Weight& a, const Weight& b);
Weight slice(const Weight& w, std::size_t offset, std::size_t length);

// Renders scaled coordinates as exact plain numbers, e.g. "(1/2,1/2,-1/2)".
std::string format_plain(const Weight& w, int scale);
// Renders the raw scaled integers, e.g. "[1,1,-1]".
std::string format_scaled(const Weight& w);

}  // namespace hmf
