#pragma once

#include <cstddef>
#include <random>

#include "wlp/algebra.hpp"
#include "wlp/graph.hpp"

namespace wlp {

/// G(n, p) with n drawn uniformly from [min_vertices, max_vertices].
Graph random_graph(std::mt19937_64& rng, std::size_t min_vertices, std::size_t max_vertices,
                   double edge_probability);

struct AlgebraShape {
  std::size_t max_vars = 4;
  std::size_t min_socle = 1;
  std::size_t max_socle = 5;
  unsigned max_exponent = 4;
  std::size_t max_mixed_generators = 3;
};

/// Random Artinian monomial algebra: a pure power x_j^a (2 <= a <= max_exponent)
/// for each variable plus a few mixed generators, resampled until the socle
/// degree falls in [min_socle, max_socle].
MonomialAlgebra random_monomial_algebra(std::mt19937_64& rng, const AlgebraShape& shape = {});

}  // namespace wlp
