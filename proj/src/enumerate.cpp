#include "boolcube/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "boolcube/cube.hpp"

namespace boolcube {

namespace {

void require_bound(unsigned n, unsigned max_n, const char* what) {
  if (n == 0) throw std::domain_error(std::string(what) + ": n must be positive");
  if (n > max_n) {
    throw std::length_error(std::string(what) + ": n=" + std::to_string(n) +
                            " exceeds brute-force bound " + std::to_string(max_n));
  }
}

BigCount binomial(unsigned n, unsigned k) {
  BigCount c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

// Serials of layer k, ascending.
std::vector<VecSerial> layer_vectors(CubeDim dim, unsigned k) {
  std::vector<VecSerial> out;
  for (std::uint64_t s = 0; s < dim.size(); ++s) {
    if (weight_of(s, dim) == k) out.emplace_back(s, dim);
  }
  return out;
}

BigCount count_chains_from(const std::vector<std::vector<VecSerial>>& layers, unsigned k,
                           VecSerial prev, ChainRelation relation) {
  if (k == layers.size()) return 1;
  BigCount total = 0;
  for (const VecSerial& v : layers[k]) {
    const bool related = relation == ChainRelation::precedes ? precedes(prev, v)
                                                             : weight_of(prev) < weight_of(v);
    if (related) total += count_chains_from(layers, k + 1, v, relation);
  }
  return total;
}

}  // namespace

BigCount count_weight_orders(unsigned n) {
  BigCount product = 1;
  for (unsigned k = 0; k <= n; ++k) {
    const BigCount c = binomial(n, k);
    BigCount f;
    mpz_fac_ui(f.get_mpz_t(), c.get_ui());
    product *= f;
  }
  return product;
}

BigCount count_max_chains_wo(unsigned n) {
  BigCount product = 1;
  for (unsigned k = 0; k <= n; ++k) product *= binomial(n, k);
  return product;
}

BigCount count_max_chains_precedes(unsigned n) {
  BigCount f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigCount oracle_count_chains(unsigned n, ChainRelation relation) {
  require_bound(n, relation == ChainRelation::precedes ? 5 : 4, "oracle_count_chains");
  const CubeDim dim(n);
  std::vector<std::vector<VecSerial>> layers;
  for (unsigned k = 0; k <= n; ++k) layers.push_back(layer_vectors(dim, k));
  BigCount total = 0;
  for (const VecSerial& first : layers[0]) {
    total += count_chains_from(layers, 1, first, relation);
  }
  return total;
}

BigCount oracle_count_linear_extensions(unsigned n) {
  require_bound(n, 3, "oracle_count_linear_extensions");
  const CubeDim dim(n);
  const unsigned size = static_cast<unsigned>(dim.size());
  // lighter[v]: set of vectors strictly below v in the weight order
  std::vector<std::uint32_t> lighter(size, 0);
  for (unsigned v = 0; v < size; ++v) {
    for (unsigned u = 0; u < size; ++u) {
      if (weight_of(u, dim) < weight_of(v, dim)) lighter[v] |= 1u << u;
    }
  }
  const std::uint32_t full = (size == 32) ? ~0u : (1u << size) - 1;
  std::vector<BigCount> ways(std::size_t{full} + 1, 0);
  ways[0] = 1;
  for (std::uint32_t placed = 0; placed < full; ++placed) {
    if (ways[placed] == 0) continue;
    for (unsigned v = 0; v < size; ++v) {
      const std::uint32_t bit = 1u << v;
      if (!(placed & bit) && (lighter[v] & placed) == lighter[v]) ways[placed | bit] += ways[placed];
    }
  }
  return ways[full];
}

BigCount oracle_count_linear_extensions_by_permutation(unsigned n) {
  require_bound(n, 3, "oracle_count_linear_extensions_by_permutation");
  const CubeDim dim(n);
  std::vector<std::uint64_t> perm(dim.size());
  std::iota(perm.begin(), perm.end(), 0);
  BigCount count = 0;
  do {
    bool compatible = true;
    for (std::size_t i = 0; i < perm.size() && compatible; ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) {
        if (weight_of(perm[j], dim) < weight_of(perm[i], dim)) {
          compatible = false;
          break;
        }
      }
    }
    if (compatible) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

BigCount oracle_count_shortest_paths(unsigned n) {
  require_bound(n, 10, "oracle_count_shortest_paths");
  const CubeDim dim(n);
  const std::uint64_t size = dim.size();
  std::vector<int> dist(size, -1);
  std::vector<BigCount> paths(size, 0);
  std::queue<std::uint64_t> frontier;
  dist[0] = 0;
  paths[0] = 1;
  frontier.push(0);
  while (!frontier.empty()) {
    const std::uint64_t u = frontier.front();
    frontier.pop();
    const Neighbors nb = adjacent_split(VecSerial(u, dim));
    for (const auto* side : {&nb.lower, &nb.upper}) {
      for (const VecSerial& v : *side) {
        if (dist[v.value()] < 0) {
          dist[v.value()] = dist[u] + 1;
          frontier.push(v.value());
        }
        if (dist[v.value()] == dist[u] + 1) paths[v.value()] += paths[u];
      }
    }
  }
  return paths[size - 1];
}

}  // namespace boolcube
