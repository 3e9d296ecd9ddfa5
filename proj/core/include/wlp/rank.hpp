#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wlp/matrix.hpp"

namespace wlp {

/// Matrices with at most this many cells go through dense Bareiss in
/// exact_rank; larger ones through the sparse fraction-free engine.
inline constexpr std::size_t kDenseBareissCells = 160 * 160;

/// Rank over Q by dense fraction-free (Bareiss) elimination on GMP integers,
/// partial pivoting on magnitude.
std::size_t bareiss_rank(const IntMatrix& m);

/// Rank over Q by sparse row-by-row fraction-free elimination. Each row is
/// reduced against primitive pivot rows (a*row - b*pivot, then divided by its
/// content); the pivot of a row is its highest nonzero column. Runs in 64-bit
/// with overflow detection and reruns on GMP integers if a bound is hit.
std::size_t fraction_free_rank(const IntMatrix& m);

/// Exact rank over Q, dispatching between the two engines above.
std::size_t exact_rank(const IntMatrix& m);

/// Rank over GF(p) by column-wise sparse elimination. p must be an odd prime
/// below 2^32.
std::size_t rank_mod_prime(const IntMatrix& m, std::uint32_t p);

bool is_prime(std::uint64_t n);

/// `count` distinct primes drawn from (2^30, 2^31) by a seeded generator.
std::vector<std::uint32_t> random_primes(std::size_t count, std::uint64_t seed);

/// Three primes from a fixed seed; what modular_rank uses by default.
const std::vector<std::uint32_t>& default_primes();

/// max over p of rank mod p. Never exceeds the rank over Q.
std::size_t modular_rank(const IntMatrix& m, std::span<const std::uint32_t> primes);
std::size_t modular_rank(const IntMatrix& m);

struct RankCrossCheck {
  std::size_t exact = 0;
  std::size_t modular = 0;
  bool agree() const noexcept { return exact == modular; }
};

RankCrossCheck cross_checked_rank(const IntMatrix& m,
                                  std::span<const std::uint32_t> primes = default_primes());

}  // namespace wlp
