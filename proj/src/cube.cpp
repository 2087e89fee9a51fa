#include "boolcube/cube.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace boolcube {

namespace {

void require_same_dim(VecSerial a, VecSerial b) {
  if (a.dim() != b.dim()) {
    throw std::domain_error("vectors of different dimensions: " +
                            std::to_string(a.dim().n()) + " and " +
                            std::to_string(b.dim().n()));
  }
}

}  // namespace

CubeDim::CubeDim(unsigned n) : n_(n) {
  if (n < 1 || n > kMax) {
    throw std::domain_error("cube dimension must be in [1, 30], got " + std::to_string(n));
  }
}

VecSerial::VecSerial(std::uint64_t serial, CubeDim dim) : serial_(serial), dim_(dim) {
  if (serial >= dim.size()) {
    throw std::domain_error("serial " + std::to_string(serial) + " out of range for n=" +
                            std::to_string(dim.n()));
  }
}

unsigned weight_of(VecSerial v) noexcept { return static_cast<unsigned>(std::popcount(v.value())); }

unsigned weight_of(std::uint64_t serial, CubeDim dim) { return weight_of(VecSerial(serial, dim)); }

WeightTable build_weight_table(CubeDim dim) {
  std::vector<std::uint8_t> w(dim.size());
  w[0] = 0;
  for (std::uint64_t half = 1; half < dim.size(); half <<= 1) {
    for (std::uint64_t i = 0; i < half; ++i) w[half + i] = static_cast<std::uint8_t>(w[i] + 1);
  }
  return WeightTable(dim, std::move(w));
}

unsigned hamming_distance(VecSerial a, VecSerial b) {
  require_same_dim(a, b);
  return static_cast<unsigned>(std::popcount(a.value() ^ b.value()));
}

bool precedes(VecSerial a, VecSerial b) {
  require_same_dim(a, b);
  return (a.value() & b.value()) == a.value();
}

Neighbors adjacent_split(VecSerial v) {
  Neighbors out;
  const unsigned n = v.dim().n();
  out.lower.reserve(weight_of(v));
  out.upper.reserve(n - weight_of(v));
  // clearing a higher bit gives a smaller serial, setting one a larger serial
  for (unsigned b = n; b-- > 0;) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    if (v.value() & bit) out.lower.emplace_back(v.value() ^ bit, v.dim());
  }
  for (unsigned b = 0; b < n; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    if (!(v.value() & bit)) out.upper.emplace_back(v.value() ^ bit, v.dim());
  }
  return out;
}

}  // namespace boolcube
