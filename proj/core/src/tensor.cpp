#include "wlp/tensor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "wlp/errors.hpp"

namespace wlp {

namespace {

std::vector<Monomial::Exponent> padded(const Monomial& m, std::size_t before, std::size_t after) {
  std::vector<Monomial::Exponent> e(before, 0);
  e.insert(e.end(), m.exponents().begin(), m.exponents().end());
  e.resize(e.size() + after, 0);
  return e;
}

std::vector<std::string> joined_labels(const std::vector<std::string>& first,
                                       const std::vector<std::string>& second) {
  std::vector<std::string> out = first;
  for (std::string label : second) {
    while (std::find(out.begin(), out.end(), label) != out.end()) label += "'";
    out.push_back(std::move(label));
  }
  return out;
}

/// All-ones map of A between degrees d and d + t; empty shape when d < 0.
IntMatrix inner_map(const MonomialAlgebra& a, long d, std::size_t t) {
  if (d < 0) return IntMatrix(a.dimension(static_cast<std::size_t>(d + static_cast<long>(t))), 0);
  return multiplication_map(a, LinearForm::all_ones(a.num_vars()), static_cast<std::size_t>(d), t)
      .matrix();
}

void check_degree(const TensorAlgebra& tb, std::size_t i) {
  if (i > tb.inner.socle_degree()) {
    throw DomainError("degree " + std::to_string(i) + " outside 0.." +
                      std::to_string(tb.inner.socle_degree()));
  }
}

}  // namespace

TensorAlgebra tensor_with_squarefree_block(std::size_t n, const MonomialAlgebra& a) {
  if (n == 0) throw DomainError("tensor block needs n >= 1");
  if (a.socle_degree() == 0) throw DomainError("inner algebra must have socle degree D > 0");
  const std::size_t m = a.num_vars();

  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      gens.push_back(Monomial(n + m).times_variable(i).times_variable(j));
    }
  }
  for (const auto& g : a.generators()) gens.emplace_back(padded(g, n, 0));

  std::vector<std::string> block;
  for (std::size_t i = 1; i <= n; ++i) block.push_back("x_" + std::to_string(i));
  MonomialAlgebra realized = from_generators(n + m, std::move(gens),
                                             joined_labels(block, a.var_labels()));

  // the canonical order must reproduce x_1 A_{i-1}, ..., x_n A_{i-1}, A_i
  for (std::size_t i = 0; i <= a.socle_degree() + 1; ++i) {
    std::vector<Monomial> expected;
    if (i > 0) {
      for (std::size_t k = 0; k < n; ++k) {
        for (const auto& mono : a.basis(i - 1)) {
          expected.push_back(Monomial(padded(mono, n, 0)).times_variable(k));
        }
      }
    }
    for (const auto& mono : a.basis(i)) expected.emplace_back(padded(mono, n, 0));
    if (expected != realized.basis(i)) {
      throw std::logic_error("tensor basis of degree " + std::to_string(i) +
                             " is not in block order");
    }
  }
  return TensorAlgebra{n, a, std::move(realized)};
}

GradedMap block_matrix(const TensorAlgebra& tb, std::size_t i) {
  check_degree(tb, i);
  return multiplication_map(tb.realized, LinearForm::all_ones(tb.realized.num_vars()), i);
}

IntMatrix assemble_block_layout(const TensorAlgebra& tb, std::size_t i) {
  check_degree(tb, i);
  const std::size_t n = tb.n;
  const auto& a = tb.inner;
  const std::size_t h_prev = i == 0 ? 0 : a.dimension(i - 1);
  const std::size_t h_i = a.dimension(i);
  const std::size_t h_next = a.dimension(i + 1);
  const IntMatrix diagonal = inner_map(a, static_cast<long>(i) - 1, 1);
  const IntMatrix corner = inner_map(a, static_cast<long>(i), 1);

  IntMatrix out(n * h_i + h_next, n * h_prev + h_i);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t c = 0; c < h_prev; ++c) {
      IntMatrix::Column column;
      for (const auto& e : diagonal.column(c)) column.push_back({k * h_i + e.row, e.value});
      out.set_column(k * h_prev + c, std::move(column));
    }
  }
  for (std::size_t c = 0; c < h_i; ++c) {
    IntMatrix::Column column;
    for (std::size_t k = 0; k < n; ++k) column.push_back({k * h_i + c, Integer(1)});
    for (const auto& e : corner.column(c)) column.push_back({n * h_i + e.row, e.value});
    out.set_column(n * h_prev + c, std::move(column));
  }
  return out;
}

BlockMatrixReport verdict_via_theorem(const TensorAlgebra& tb, std::size_t i) {
  check_degree(tb, i);
  const std::size_t d = tb.inner.socle_degree();
  GradedMap direct = block_matrix(tb, i);
  const RankVerdict direct_verdict{direct.injective(), direct.surjective()};

  TheoremPrediction predicted;
  bool agree = true;
  if (i == 0) {
    predicted.injective = true;
    agree = direct_verdict.injective;
  } else {
    const GradedMap single(i - 1, 1, inner_map(tb.inner, static_cast<long>(i) - 1, 1));
    if (i == d) {
      predicted.maximal_rank = single.surjective();
      agree = *predicted.maximal_rank == direct_verdict.maximal_rank();
    } else {
      const GradedMap square(i - 1, 2, inner_map(tb.inner, static_cast<long>(i) - 1, 2));
      predicted.injective = single.injective() && square.injective();
      predicted.surjective = single.surjective() && square.surjective();
      agree = *predicted.injective == direct_verdict.injective &&
              *predicted.surjective == direct_verdict.surjective;
    }
  }
  return BlockMatrixReport{i, std::move(direct), predicted, direct_verdict, agree};
}

std::size_t block_rank_from_inner(const TensorAlgebra& tb, std::size_t i) {
  check_degree(tb, i);
  if (i == 0) return 1;
  const GradedMap single(i - 1, 1, inner_map(tb.inner, static_cast<long>(i) - 1, 1));
  const GradedMap square(i - 1, 2, inner_map(tb.inner, static_cast<long>(i) - 1, 2));
  return tb.inner.dimension(i) + (tb.n - 1) * single.rank() + square.rank();
}

MonomialAlgebra tensor_product(const MonomialAlgebra& a1, const MonomialAlgebra& a2) {
  const std::size_t n1 = a1.num_vars();
  const std::size_t n2 = a2.num_vars();
  if (n1 == 0 || n2 == 0) throw DomainError("tensor factors need at least one variable");
  std::vector<Monomial> gens;
  for (const auto& g : a1.generators()) gens.emplace_back(padded(g, 0, n2));
  for (const auto& g : a2.generators()) gens.emplace_back(padded(g, n1, 0));
  return from_generators(n1 + n2, std::move(gens), joined_labels(a1.var_labels(), a2.var_labels()));
}

TensorWitness tensor_witness(const MonomialAlgebra& a1, std::size_t i, const MonomialAlgebra& a2,
                             std::size_t j, MapProperty property) {
  const auto fails = [property](const GradedMap& map) {
    return property == MapProperty::kSurjective ? !map.surjective() : !map.injective();
  };
  const char* name = property == MapProperty::kSurjective ? "surjective" : "injective";
  const GradedMap first = multiplication_map(a1, LinearForm::all_ones(a1.num_vars()), i);
  const GradedMap second = multiplication_map(a2, LinearForm::all_ones(a2.num_vars()), j);
  if (!fails(first) || !fails(second)) {
    throw DomainError(std::string("both constituent maps must fail to be ") + name +
                      " (degrees " + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  const MonomialAlgebra product = tensor_product(a1, a2);
  const std::size_t degree = property == MapProperty::kSurjective ? i + j + 1 : i + j;
  GradedMap map = multiplication_map(product, LinearForm::all_ones(product.num_vars()), degree);
  const bool combined_fails = fails(map);
  return TensorWitness{degree, std::move(map), combined_fails};
}

bool tensor_failure_witness(const MonomialAlgebra& a1, std::size_t i, const MonomialAlgebra& a2,
                            std::size_t j, MapProperty property) {
  return tensor_witness(a1, i, a2, j, property).fails;
}

}  // namespace wlp
