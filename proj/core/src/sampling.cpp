#include "wlp/sampling.hpp"

#include <vector>

#include "wlp/errors.hpp"

namespace wlp {

Graph random_graph(std::mt19937_64& rng, std::size_t min_vertices, std::size_t max_vertices,
                   double edge_probability) {
  if (min_vertices > max_vertices) throw DomainError("empty vertex range");
  std::uniform_int_distribution<std::size_t> size(min_vertices, max_vertices);
  std::bernoulli_distribution coin(edge_probability);
  const std::size_t n = size(rng);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return custom(n, edges);
}

MonomialAlgebra random_monomial_algebra(std::mt19937_64& rng, const AlgebraShape& shape) {
  if (shape.max_vars == 0 || shape.max_exponent < 2 || shape.min_socle > shape.max_socle) {
    throw DomainError("unsatisfiable algebra shape");
  }
  std::uniform_int_distribution<std::size_t> var_count(1, shape.max_vars);
  std::uniform_int_distribution<unsigned> power(2, shape.max_exponent);
  std::uniform_int_distribution<unsigned> mixed_exponent(0, shape.max_exponent - 1);
  std::uniform_int_distribution<std::size_t> mixed_count(0, shape.max_mixed_generators);

  for (int attempt = 0; attempt < 10000; ++attempt) {
    const std::size_t k = var_count(rng);
    std::vector<Monomial> gens;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<unsigned> e(k, 0);
      e[j] = power(rng);
      gens.push_back(Monomial::from_exponents(e));
    }
    const std::size_t extra = k > 1 ? mixed_count(rng) : 0;
    for (std::size_t g = 0; g < extra; ++g) {
      std::vector<unsigned> e(k, 0);
      unsigned support = 0;
      for (auto& x : e) {
        x = mixed_exponent(rng);
        support += x > 0 ? 1 : 0;
      }
      if (support >= 2) gens.push_back(Monomial::from_exponents(e));
    }
    MonomialAlgebra a = from_generators(k, std::move(gens));
    if (a.socle_degree() >= shape.min_socle && a.socle_degree() <= shape.max_socle) return a;
  }
  throw DomainError("could not sample an algebra of the requested shape");
}

}  // namespace wlp
