#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wlp/rank.hpp"

using namespace wlp;

TEST_CASE("ranks of small fixed matrices") {
  CHECK(exact_rank(IntMatrix(0, 0)) == 0);
  CHECK(exact_rank(IntMatrix(3, 0)) == 0);
  CHECK(exact_rank(IntMatrix(0, 3)) == 0);
  CHECK(exact_rank(IntMatrix(4, 4)) == 0);
  CHECK(exact_rank(IntMatrix::identity(7)) == 7);
  const auto singular = IntMatrix::from_dense(std::vector<std::vector<long>>{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(bareiss_rank(singular) == 2);
  CHECK(fraction_free_rank(singular) == 2);
  CHECK(modular_rank(singular) == 2);
  const auto negative = IntMatrix::from_dense(std::vector<std::vector<long>>{{-1, 1}, {1, -1}, {-2, 2}});
  CHECK(bareiss_rank(negative) == 1);
  CHECK(fraction_free_rank(negative) == 1);
}

TEST_CASE("rank mod p sees characteristic") {
  // det = 6 vanishes modulo 2 and 3 only; the engine refuses p = 2
  const auto m = IntMatrix::from_dense(std::vector<std::vector<long>>{{2, 0}, {0, 3}});
  CHECK(rank_mod_prime(m, 3) == 1);
  CHECK(rank_mod_prime(m, 5) == 2);
  CHECK_THROWS(rank_mod_prime(m, 2));
  CHECK_THROWS(rank_mod_prime(m, 9));
}

TEST_CASE("engines agree with rational elimination on random dense matrices") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 200; ++k) {
    const IntMatrix m = oracle::random_matrix(rng, 20, -9, 9, k % 2 == 0 ? 1.0 : 0.3);
    const std::size_t expected = oracle::rational_rank(m);
    CHECK(bareiss_rank(m) == expected);
    CHECK(fraction_free_rank(m) == expected);
    CHECK(modular_rank(m) == expected);
  }
}

TEST_CASE("engines agree on rank-deficient products") {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 40; ++k) {
    std::uniform_int_distribution<std::size_t> dim(1, 25);
    std::uniform_int_distribution<long> value(-3, 3);
    const std::size_t r = dim(rng), inner = 1 + dim(rng) % 6, c = dim(rng);
    std::vector<std::vector<long>> a(r, std::vector<long>(inner)), b(inner, std::vector<long>(c));
    for (auto& row : a) for (auto& x : row) x = value(rng);
    for (auto& row : b) for (auto& x : row) x = value(rng);
    const IntMatrix m = IntMatrix::from_dense(a) * IntMatrix::from_dense(b);
    const std::size_t expected = oracle::rational_rank(m);
    CHECK(expected <= inner);
    CHECK(bareiss_rank(m) == expected);
    CHECK(fraction_free_rank(m) == expected);
    CHECK(modular_rank(m) == expected);
  }
}

TEST_CASE("fraction-free engine falls back to big integers") {
  // entries near 2^61 overflow the 64-bit path immediately
  const Integer big = Integer(1) << 61;
  std::vector<std::vector<Integer>> rows = {
      {big, big + 1, 3}, {big - 1, big, 5}, {2 * big - 1, 2 * big + 1, 8}};
  const IntMatrix m = IntMatrix::from_dense(rows);
  CHECK(fraction_free_rank(m) == oracle::rational_rank(m));
  CHECK(bareiss_rank(m) == oracle::rational_rank(m));

  std::vector<std::vector<Integer>> huge = {{Integer("123456789012345678901234567890"), 1},
                                            {Integer("246913578024691357802469135780"), 2}};
  CHECK(fraction_free_rank(IntMatrix::from_dense(huge)) == 1);
  CHECK(modular_rank(IntMatrix::from_dense(huge)) == 1);
}

TEST_CASE("sparse engines agree on larger sparse 0/1 matrices") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 10; ++k) {
    const IntMatrix m = oracle::random_matrix(rng, 220, 0, 1, 0.03);
    const std::size_t exact = fraction_free_rank(m);
    CHECK(exact == bareiss_rank(m));
    CHECK(exact == modular_rank(m));
    CHECK(exact == exact_rank(m));
  }
}

TEST_CASE("prime helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(2147483647ULL));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(2147483649ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  const auto primes = random_primes(5, 99);
  CHECK(primes.size() == 5);
  for (auto p : primes) {
    CHECK(is_prime(p));
    CHECK(p > (1U << 30));
    CHECK(p < (1U << 31));
  }
  CHECK(random_primes(5, 99) == primes);
  CHECK(default_primes().size() == 3);
  const RankCrossCheck check = cross_checked_rank(IntMatrix::identity(3));
  CHECK(check.agree());
  CHECK(check.exact == 3);
}
