#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wlp/graph.hpp"
#include "wlp/polynomial.hpp"

namespace wlp {

/// Unimodality verdict for a polynomial with nonnegative coefficients.
/// `mode` is the unique i with a_{i-1} < a_i >= a_{i+1} >= ... (a_{-1} = 0),
/// present exactly when the coefficients are unimodal.
struct ModeAnalysis {
  bool is_unimodal = false;
  std::optional<std::size_t> mode;

  friend bool operator==(const ModeAnalysis&, const ModeAnalysis&) = default;
};

/// I(G; t) via the deletion recursion I(G) = I(G - v) + t I(G - N[v]).
/// Connected components are multiplied separately; subproblems are memoized
/// on the surviving-vertex mask. The memo is local to one call, so concurrent
/// calls on distinct or shared graphs are safe.
IntPolynomial independence_polynomial(const Graph& g);

/// All independent sets of cardinality k, ordered lexicographically by
/// sorted member list.
std::vector<VertexSet> independent_sets_of_size(const Graph& g, std::size_t k);

/// Independent sets grouped by cardinality: entry k lists the k-sets in the
/// same order as independent_sets_of_size(g, k). Entry 0 is {{}}.
std::vector<std::vector<VertexSet>> independent_sets_by_size(const Graph& g);

ModeAnalysis mode_analysis(const IntPolynomial& p);

/// Mode of I(P_n; t).
std::size_t mode_of_path(std::size_t n);

/// Mode analysis of f + g for unimodal f, g whose modes differ by at most one.
/// Throws DomainError when that hypothesis fails.
ModeAnalysis check_unimodal_sum(const IntPolynomial& f, const IntPolynomial& g);

}  // namespace wlp
