#pragma once

#include <cstddef>
#include <optional>

#include "wlp/algebra.hpp"

namespace wlp {

/// B = k[x_1..x_n]/(x_1..x_n)^2 (x) A. `realized` lives in n + m variables,
/// x-block first, so its degree-i basis is x_1 A_{i-1}, ..., x_n A_{i-1}, A_i.
struct TensorAlgebra {
  std::size_t n = 0;
  MonomialAlgebra inner;
  MonomialAlgebra realized;
};

/// Throws DomainError for n = 0 or an inner algebra of socle degree 0.
TensorAlgebra tensor_with_squarefree_block(std::size_t n, const MonomialAlgebra& a);

/// Multiplication by l' = x_1 + ... + x_n + l on [B]_i, computed directly on
/// the realized algebra. Requires 0 <= i <= D, D the socle degree of A.
GradedMap block_matrix(const TensorAlgebra& tb, std::size_t i);

/// The same matrix put together from blocks M^{i-1}_i and M^i_{i+1} of A:
/// n diagonal copies of M^{i-1}_i, a last block column of identities I_{h_i},
/// and M^i_{i+1} in the corner. At i = 0 and i = D some blocks are empty.
IntMatrix assemble_block_layout(const TensorAlgebra& tb, std::size_t i);

struct RankVerdict {
  bool injective = false;
  bool surjective = false;
  bool maximal_rank() const noexcept { return injective || surjective; }
};

/// What the theorem asserts at one degree; unset fields are not asserted.
/// At i = 0 only injectivity is claimed, at i = D only maximal rank.
struct TheoremPrediction {
  std::optional<bool> injective;
  std::optional<bool> surjective;
  std::optional<bool> maximal_rank;
};

struct BlockMatrixReport {
  std::size_t degree = 0;
  GradedMap direct_matrix;
  TheoremPrediction predicted;
  RankVerdict direct;
  bool agree = false;
};

/// Compares the direct rank verdict of block_matrix(tb, i) with the
/// prediction from the all-ones maps l : A_{i-1} -> A_i and
/// l^2 : A_{i-1} -> A_{i+1}:
///   i = 0:          injective;
///   1 <= i <= D-1:  injective (surjective) iff both maps are;
///   i = D:          maximal rank iff l : A_{D-1} -> A_D is surjective.
BlockMatrixReport verdict_via_theorem(const TensorAlgebra& tb, std::size_t i);

/// rank of l' on [B]_i from ranks on A alone:
///   h_i + (n - 1) rank(l : A_{i-1} -> A_i) + rank(l^2 : A_{i-1} -> A_{i+1})
/// for 1 <= i <= D, and 1 at i = 0.
std::size_t block_rank_from_inner(const TensorAlgebra& tb, std::size_t i);

/// a1 (x) a2 over the concatenated variables. Labels of a2 that clash with
/// labels of a1 get a trailing prime.
MonomialAlgebra tensor_product(const MonomialAlgebra& a1, const MonomialAlgebra& a2);

enum class MapProperty { kSurjective, kInjective };

struct TensorWitness {
  std::size_t degree = 0;
  GradedMap map;
  bool fails = false;
};

/// If the all-ones maps of a1 at degree i and of a2 at degree j both fail
/// `property`, the all-ones map of a1 (x) a2 fails it at degree i + j + 1
/// (surjectivity) or i + j (injectivity). Throws DomainError when the two
/// constituent maps do not both fail.
TensorWitness tensor_witness(const MonomialAlgebra& a1, std::size_t i, const MonomialAlgebra& a2,
                             std::size_t j, MapProperty property);

bool tensor_failure_witness(const MonomialAlgebra& a1, std::size_t i, const MonomialAlgebra& a2,
                            std::size_t j, MapProperty property);

}  // namespace wlp
