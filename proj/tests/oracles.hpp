// Independent reference computations used only by the tests. None of them
// share code with the library routines they check.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "wlp/algebra.hpp"
#include "wlp/graph.hpp"
#include "wlp/matrix.hpp"
#include "wlp/polynomial.hpp"

namespace oracle {

/// Counts of independent k-subsets by testing all 2^n subsets.
inline std::vector<long> brute_force_independence_counts(const wlp::Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> adjacency(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adjacency[u] |= 1U << v;
    adjacency[v] |= 1U << u;
  }
  std::vector<long> counts(n + 1, 0);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool independent = true;
    for (std::size_t v = 0; v < n && independent; ++v) {
      if (((mask >> v) & 1U) != 0 && (adjacency[v] & mask) != 0) independent = false;
    }
    if (independent) ++counts[static_cast<std::size_t>(__builtin_popcount(mask))];
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

inline wlp::IntPolynomial to_polynomial(const std::vector<long>& counts) {
  std::vector<wlp::Integer> c;
  for (long x : counts) c.emplace_back(x);
  return wlp::IntPolynomial(std::move(c));
}

/// Mode straight from the definition: the unique i with a_{i-1} < a_i and
/// a_i >= a_{i+1} >= ... >= a_n, after checking unimodality by counting
/// direction changes. Returns -1 when not unimodal.
inline long definition_mode(const std::vector<long>& a) {
  long found = -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long before = i == 0 ? 0 : a[i - 1];
    if (before >= a[i]) continue;
    bool tail = true;
    for (std::size_t j = i; j + 1 < a.size(); ++j) tail = tail && a[j] >= a[j + 1];
    bool head = true;
    for (std::size_t j = 0; j < i; ++j) head = head && a[j] <= a[j + 1];
    if (tail && head) {
      if (found >= 0) return -1;
      found = static_cast<long>(i);
    }
  }
  return found;
}

/// I(P_n) by the path recursion I(P_n) = I(P_{n-1}) + t I(P_{n-2}).
inline wlp::IntPolynomial path_polynomial(std::size_t n) {
  wlp::IntPolynomial before{1};     // P_{-1}
  wlp::IntPolynomial current{1};    // P_0
  for (std::size_t k = 1; k <= n; ++k) {
    wlp::IntPolynomial next = current + before.shifted(1);
    before = current;
    current = next;
  }
  return current;
}

/// I(L_{m,n}) = (1 + (m-1) t) I(P_n) + t I(P_{n-1}): at most one clique
/// vertex, and choosing the bridge vertex removes the first path vertex.
inline wlp::IntPolynomial lollipop_polynomial(std::size_t m, std::size_t n) {
  return wlp::IntPolynomial{1, static_cast<long>(m) - 1} * path_polynomial(n) +
         path_polynomial(n - 1).shifted(1);
}

/// Rank over Q by Gauss-Jordan elimination on rationals.
inline std::size_t rational_rank(const wlp::IntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.column(c)) a[e.row][c] = mpq_class(e.value);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Standard monomials of degree d by scanning the whole exponent box
/// [0, bound_j) with bound_j the pure-power exponent of variable j.
inline std::vector<std::vector<unsigned>> box_standard_monomials(
    const std::vector<std::vector<unsigned>>& gens, std::size_t num_vars, unsigned d) {
  std::vector<unsigned> bound(num_vars, 0);
  for (const auto& g : gens) {
    std::size_t support = 0;
    std::size_t var = 0;
    for (std::size_t j = 0; j < num_vars; ++j) {
      if (g[j] > 0) {
        ++support;
        var = j;
      }
    }
    if (support == 1 && (bound[var] == 0 || g[var] < bound[var])) bound[var] = g[var];
  }
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(num_vars, 0);
  while (true) {
    unsigned total = 0;
    for (unsigned x : e) total += x;
    bool standard = total == d;
    for (const auto& g : gens) {
      if (!standard) break;
      bool divides = true;
      for (std::size_t j = 0; j < num_vars; ++j) divides = divides && g[j] <= e[j];
      if (divides) standard = false;
    }
    if (standard) out.push_back(e);
    std::size_t j = 0;
    while (j < num_vars && ++e[j] >= bound[j]) e[j++] = 0;
    if (j == num_vars) break;
  }
  return out;
}

/// Matrix of multiplication by ell^t from [A]_i to [A]_{i+t}, expanding
/// ell^t by the multinomial theorem: ell^t = sum over exponent vectors k with
/// |k| = t of t!/(k_1!...k_n!) prod (c_j x_j)^{k_j}.
inline wlp::IntMatrix multinomial_power_matrix(const wlp::MonomialAlgebra& a,
                                               const std::vector<long>& form, std::size_t i,
                                               std::size_t t) {
  const std::size_t n = a.num_vars();
  const auto& source = a.basis(i);
  const auto& target = a.basis(i + t);
  std::map<std::vector<wlp::Monomial::Exponent>, std::size_t> row_of;
  for (std::size_t r = 0; r < target.size(); ++r) row_of[target[r].exponents()] = r;

  std::vector<std::pair<std::vector<unsigned>, mpz_class>> terms;
  std::vector<unsigned> k(n, 0);
  const auto recurse = [&](auto&& self, std::size_t j, unsigned left) -> void {
    if (j + 1 == n) {
      k[j] = left;
      mpz_class coeff;
      mpz_fac_ui(coeff.get_mpz_t(), t);
      for (std::size_t v = 0; v < n; ++v) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), k[v]);
        coeff /= f;
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), mpz_class(form[v]).get_mpz_t(), k[v]);
        coeff *= power;
      }
      if (coeff != 0) terms.emplace_back(k, coeff);
      return;
    }
    for (unsigned x = 0; x <= left; ++x) {
      k[j] = x;
      self(self, j + 1, left - x);
    }
  };
  if (n > 0) recurse(recurse, 0, static_cast<unsigned>(t));

  std::vector<std::vector<mpz_class>> dense(target.size(), std::vector<mpz_class>(source.size()));
  for (std::size_t c = 0; c < source.size(); ++c) {
    for (const auto& [powers, coeff] : terms) {
      std::vector<wlp::Monomial::Exponent> e = source[c].exponents();
      bool fits = true;
      for (std::size_t v = 0; v < n; ++v) {
        if (e[v] + powers[v] > 255) fits = false;
        e[v] = static_cast<wlp::Monomial::Exponent>(e[v] + powers[v]);
      }
      if (!fits) continue;
      if (auto it = row_of.find(e); it != row_of.end()) dense[it->second][c] += coeff;
    }
  }
  wlp::IntMatrix out(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    wlp::IntMatrix::Column column;
    for (std::size_t r = 0; r < target.size(); ++r) {
      if (dense[r][c] != 0) column.push_back({r, dense[r][c]});
    }
    out.set_column(c, std::move(column));
  }
  return out;
}

inline wlp::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long lo, long hi,
                                    double density = 1.0) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<long> value(lo, hi);
  std::bernoulli_distribution keep(density);
  const std::size_t rows = dim(rng);
  const std::size_t cols = dim(rng);
  std::vector<std::vector<long>> dense(rows, std::vector<long>(cols, 0));
  for (auto& row : dense) {
    for (auto& x : row) x = keep(rng) ? value(rng) : 0;
  }
  return wlp::IntMatrix::from_dense(dense);
}

}  // namespace oracle
