#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wlp/errors.hpp"
#include "wlp/lefschetz.hpp"
#include "wlp/sampling.hpp"
#include "wlp/tensor.hpp"

using namespace wlp;

namespace {

MonomialAlgebra one_variable(unsigned power) {
  return from_generators(1, {Monomial::from_exponents(std::vector<unsigned>{power})});
}

MonomialAlgebra gens(std::size_t vars, std::vector<std::vector<unsigned>> exps) {
  std::vector<Monomial> out;
  for (const auto& e : exps) out.push_back(Monomial::from_exponents(e));
  return from_generators(vars, out);
}

}  // namespace

TEST_CASE("tensor algebra shape") {
  SUBCASE("k[x]/(x^2) (x) k[y]/(y^2)") {
    const TensorAlgebra tb = tensor_with_squarefree_block(1, one_variable(2));
    CHECK(hilbert_series(tb.realized) == IntPolynomial{1, 2, 1});
    CHECK(tb.realized.var_labels() == std::vector<std::string>{"x_1", "x_1'"});
  }
  SUBCASE("dimension of [B]_1 for A(P_2), n = 2") {
    const TensorAlgebra tb = tensor_with_squarefree_block(2, from_graph(path(2)));
    CHECK(tb.realized.dimension(1) == 4);
  }
  SUBCASE("Hilbert series factor as (1 + n t) HS(A)") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 30; ++k) {
      const MonomialAlgebra a = random_monomial_algebra(rng);
      for (std::size_t n = 1; n <= 3; ++n) {
        const TensorAlgebra tb = tensor_with_squarefree_block(n, a);
        CHECK(hilbert_series(tb.realized) ==
              IntPolynomial{1, static_cast<long>(n)} * hilbert_series(a));
        CHECK(tb.realized.socle_degree() == a.socle_degree() + 1);
      }
    }
  }
  SUBCASE("quotient of a lollipop by its bridge clique vertex") {
    // A(L_{m,n}) / (x_m) is A(K_{m-1} + P_n)
    for (std::size_t m = 2; m <= 5; ++m) {
      for (std::size_t n = 1; n <= 9; ++n) {
        const TensorAlgebra tb = tensor_with_squarefree_block(m - 1, from_graph(path(n)));
        CHECK(hilbert_series(tb.realized) ==
              hilbert_series(from_graph(disjoint_union(complete(m - 1), path(n)))));
      }
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(tensor_with_squarefree_block(0, one_variable(2)), DomainError);
    CHECK_THROWS_AS(tensor_with_squarefree_block(2, one_variable(1)), DomainError);
    const TensorAlgebra tb = tensor_with_squarefree_block(1, one_variable(3));
    CHECK_THROWS_AS(block_matrix(tb, 3), DomainError);
    CHECK_THROWS_AS(assemble_block_layout(tb, 3), DomainError);
    CHECK_THROWS_AS(verdict_via_theorem(tb, 3), DomainError);
  }
}

TEST_CASE("block matrices") {
  SUBCASE("degree 0 is a column of ones over M^0_1") {
    const TensorAlgebra tb = tensor_with_squarefree_block(3, from_graph(path(4)));
    const GradedMap m = block_matrix(tb, 0);
    CHECK(m.target_dimension() == 3 + 4);
    CHECK(m.source_dimension() == 1);
    for (std::size_t r = 0; r < 7; ++r) CHECK(m.matrix().at(r, 0) == 1);
  }
  SUBCASE("n = 1, A = k[y]/(y^2), top degree") {
    const TensorAlgebra tb = tensor_with_squarefree_block(1, one_variable(2));
    const GradedMap m = block_matrix(tb, 1);
    CHECK(m.matrix() == IntMatrix::from_dense(std::vector<std::vector<long>>{{1, 1}}));
  }
  SUBCASE("top degree has shape n h_D x (n h_{D-1} + h_D)") {
    const MonomialAlgebra a = from_graph(path(5));
    const std::size_t d = a.socle_degree();
    for (std::size_t n = 1; n <= 3; ++n) {
      const GradedMap m = block_matrix(tensor_with_squarefree_block(n, a), d);
      CHECK(m.target_dimension() == n * a.dimension(d));
      CHECK(m.source_dimension() == n * a.dimension(d - 1) + a.dimension(d));
    }
  }
  SUBCASE("assembled layout equals the direct matrix") {
    std::mt19937_64 rng(42);
    AlgebraShape shape;
    shape.max_vars = 3;
    shape.max_socle = 4;
    for (int k = 0; k < 30; ++k) {
      const MonomialAlgebra a = random_monomial_algebra(rng, shape);
      for (std::size_t n = 1; n <= 3; ++n) {
        const TensorAlgebra tb = tensor_with_squarefree_block(n, a);
        for (std::size_t i = 0; i <= a.socle_degree(); ++i) {
          CHECK(assemble_block_layout(tb, i) == block_matrix(tb, i).matrix());
        }
      }
    }
  }
}

TEST_CASE("rank of l' from ranks of l and l^2 on A") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 40; ++k) {
    const MonomialAlgebra a = random_monomial_algebra(rng);
    for (std::size_t n = 1; n <= 3; ++n) {
      const TensorAlgebra tb = tensor_with_squarefree_block(n, a);
      for (std::size_t i = 0; i <= a.socle_degree(); ++i) {
        const GradedMap direct = block_matrix(tb, i);
        CHECK(block_rank_from_inner(tb, i) == direct.rank());
        CHECK(direct.rank() == oracle::rational_rank(direct.matrix()));
      }
    }
  }
}

TEST_CASE("theorem verdicts with two or more x-variables") {
  std::mt19937_64 rng(44);
  for (int k = 0; k < 40; ++k) {
    const MonomialAlgebra a = random_monomial_algebra(rng);
    for (std::size_t n = 2; n <= 3; ++n) {
      const TensorAlgebra tb = tensor_with_squarefree_block(n, a);
      for (std::size_t i = 0; i <= a.socle_degree(); ++i) CHECK(verdict_via_theorem(tb, i).agree);
    }
  }
}

TEST_CASE("theorem verdict examples") {
  SUBCASE("degree 0 is injective") {
    const BlockMatrixReport r = verdict_via_theorem(tensor_with_squarefree_block(2, from_graph(path(3))), 0);
    CHECK(r.predicted.injective == true);
    CHECK_FALSE(r.predicted.surjective.has_value());
    CHECK(r.direct_matrix.rank() == 1);
    CHECK(r.agree);
  }
  SUBCASE("A(P_9), n = 2 fails surjectivity at the mode") {
    const BlockMatrixReport r = verdict_via_theorem(tensor_with_squarefree_block(2, from_graph(path(9))), 3);
    CHECK(r.predicted.surjective == false);
    CHECK_FALSE(r.direct.surjective);
    CHECK(r.agree);
  }
  SUBCASE("k[y]/(y^3), n = 1, degree 1 is bijective") {
    const BlockMatrixReport r = verdict_via_theorem(tensor_with_squarefree_block(1, one_variable(3)), 1);
    CHECK(r.predicted.injective == true);
    CHECK(r.predicted.surjective == true);
    CHECK(r.direct.injective);
    CHECK(r.direct.surjective);
    CHECK(r.direct_matrix.target_dimension() == 2);
    CHECK(r.direct_matrix.source_dimension() == 2);
  }
}

TEST_CASE("with one x-variable the surjectivity and top-degree clauses can fail") {
  SUBCASE("k[y1,y2]/(y1^2, y2^2), degree 1") {
    // l: A_0 -> A_1 is not onto, l^2: A_0 -> A_2 is, and l' on B_1 is a bijection
    const TensorAlgebra tb = tensor_with_squarefree_block(1, gens(2, {{2, 0}, {0, 2}}));
    const BlockMatrixReport r = verdict_via_theorem(tb, 1);
    CHECK(r.predicted.surjective == false);
    CHECK(r.direct.surjective);
    CHECK_FALSE(r.agree);
    CHECK(r.direct_matrix.rank() == block_rank_from_inner(tb, 1));
  }
  SUBCASE("k[y1,y2]/(y1, y2)^2, top degree") {
    const TensorAlgebra tb = tensor_with_squarefree_block(1, gens(2, {{2, 0}, {1, 1}, {0, 2}}));
    const BlockMatrixReport r = verdict_via_theorem(tb, 1);
    CHECK(r.direct_matrix.matrix() ==
          IntMatrix::from_dense(std::vector<std::vector<long>>{{1, 1, 0}, {1, 0, 1}}));
    CHECK(r.predicted.maximal_rank == false);
    CHECK(r.direct.surjective);
    CHECK_FALSE(r.agree);
  }
}

TEST_CASE("tensor failure witnesses") {
  SUBCASE("A(P_8) (x) A(P_8) at degree 5") {
    const MonomialAlgebra p8 = from_graph(path(8));
    const TensorWitness w = tensor_witness(p8, 2, p8, 2, MapProperty::kSurjective);
    CHECK(w.degree == 5);
    CHECK(w.fails);
    CHECK(w.map.rank() == oracle::rational_rank(w.map.matrix()));
  }
  SUBCASE("preconditions") {
    const MonomialAlgebra y = one_variable(2);
    CHECK_THROWS_AS(tensor_failure_witness(y, 0, y, 0, MapProperty::kInjective), DomainError);
    // maps onto the zero space are surjective
    CHECK_THROWS_AS(tensor_failure_witness(y, 1, y, 1, MapProperty::kSurjective), DomainError);
  }
  SUBCASE("injectivity witness from A(P_12)") {
    const MonomialAlgebra p12 = from_graph(path(12));
    REQUIRE_FALSE(wlp_report(p12).verdicts[3].injective);
    const TensorWitness w = tensor_witness(p12, 3, p12, 3, MapProperty::kInjective);
    CHECK(w.degree == 6);
    CHECK(w.fails);
  }
  SUBCASE("product algebra is the disjoint-union graph algebra") {
    const MonomialAlgebra product = tensor_product(from_graph(path(3)), from_graph(complete(3)));
    CHECK(hilbert_series(product) == hilbert_series(from_graph(disjoint_union(path(3), complete(3)))));
  }
}
