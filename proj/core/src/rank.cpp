#include "wlp/rank.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

namespace wlp {

namespace {

__extension__ typedef unsigned __int128 u128;

// ---------------------------------------------------------------------------
// Integer policies for the sparse fraction-free engine.

struct Overflow {};

struct SmallInt {
  using Value = std::int64_t;
  static constexpr Value kLimit = Value{1} << 62;

  static Value from(const Integer& v) {
    if (!v.fits_slong_p()) throw Overflow{};
    const Value x = v.get_si();
    if (x >= kLimit || x <= -kLimit) throw Overflow{};
    return x;
  }
  static Value checked(Value x) {
    if (x >= kLimit || x <= -kLimit) throw Overflow{};
    return x;
  }
  static Value mul(Value a, Value b) {
    Value r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return checked(r);
  }
  static Value sub(Value a, Value b) {
    Value r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return checked(r);
  }
  static Value gcd(Value a, Value b) { return std::gcd(a, b); }
  static bool is_zero(Value a) { return a == 0; }
  static bool is_unit(Value a) { return a == 1; }
};

struct BigInt {
  using Value = Integer;
  static Value from(const Integer& v) { return v; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value sub(const Value& a, const Value& b) { return a - b; }
  static Value gcd(const Value& a, const Value& b) {
    Value g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static bool is_zero(const Value& a) { return sgn(a) == 0; }
  static bool is_unit(const Value& a) { return a == 1; }
};

template <class Policy>
std::size_t fraction_free_rank_impl(const IntMatrix& m) {
  using Value = typename Policy::Value;
  using SparseRow = std::vector<std::pair<std::uint32_t, Value>>;

  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();

  std::vector<SparseRow> rows(nrows);
  for (std::size_t c = 0; c < ncols; ++c) {
    for (const auto& e : m.column(c)) {
      rows[e.row].emplace_back(static_cast<std::uint32_t>(c), Policy::from(e.value));
    }
  }

  // pivot rows are stored with their pivot (highest column) first
  std::vector<SparseRow> pivots;
  std::vector<std::int64_t> pivot_of(ncols, -1);
  std::vector<Value> acc(ncols, Value(0));
  std::vector<char> seen(ncols, 0);
  std::vector<std::uint32_t> touched;
  std::vector<std::uint32_t> heap;

  for (std::size_t r = 0; r < nrows; ++r) {
    touched.clear();
    heap.clear();
    for (auto& [c, v] : rows[r]) {
      acc[c] = std::move(v);
      seen[c] = 1;
      touched.push_back(c);
      heap.push_back(c);
    }
    SparseRow().swap(rows[r]);
    std::make_heap(heap.begin(), heap.end());

    while (!heap.empty()) {
      std::pop_heap(heap.begin(), heap.end());
      const std::uint32_t c = heap.back();
      heap.pop_back();
      if (Policy::is_zero(acc[c]) || pivot_of[c] < 0) continue;

      const SparseRow& prow = pivots[static_cast<std::size_t>(pivot_of[c])];
      const Value& lead = prow.front().second;
      Value g = Policy::gcd(lead, acc[c]);
      Value a = lead / g;
      Value b = acc[c] / g;
      if (!Policy::is_unit(a)) {
        for (std::uint32_t t : touched) {
          if (!Policy::is_zero(acc[t])) acc[t] = Policy::mul(acc[t], a);
        }
      }
      for (const auto& [cc, v] : prow) {
        if (!seen[cc]) {
          seen[cc] = 1;
          touched.push_back(cc);
          heap.push_back(cc);
          std::push_heap(heap.begin(), heap.end());
        }
        acc[cc] = Policy::sub(acc[cc], Policy::mul(b, v));
      }
    }

    SparseRow reduced;
    Value content(0);
    for (std::uint32_t c : touched) {
      if (!Policy::is_zero(acc[c])) {
        content = Policy::gcd(content, acc[c]);
        reduced.emplace_back(c, std::move(acc[c]));
      }
      acc[c] = Value(0);
      seen[c] = 0;
    }
    if (reduced.empty()) continue;
    std::sort(reduced.begin(), reduced.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    if (!Policy::is_unit(content)) {
      for (auto& entry : reduced) entry.second /= content;
    }
    pivot_of[reduced.front().first] = static_cast<std::int64_t>(pivots.size());
    pivots.push_back(std::move(reduced));
  }
  return pivots.size();
}

// ---------------------------------------------------------------------------
// Modular engine. Works on columns, from the last to the first, and pivots
// each reduced column on its lowest nonzero row.

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp != 0) {
    if ((exp & 1U) != 0) result = static_cast<std::uint64_t>(
        static_cast<u128>(result) * base % mod);
    base = static_cast<std::uint64_t>(static_cast<u128>(base) * base % mod);
    exp >>= 1U;
  }
  return result;
}

}  // namespace

std::size_t bareiss_rank(const IntMatrix& m) {
  auto a = m.to_dense();
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  std::size_t rank = 0;
  Integer previous(1);
  Integer t1;
  Integer t2;
  for (std::size_t k = 0; k < ncols && rank < nrows; ++k) {
    std::size_t best = rank;
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      if (mpz_cmpabs(a[i][k].get_mpz_t(), a[best][k].get_mpz_t()) > 0) best = i;
    }
    if (sgn(a[best][k]) == 0) continue;
    std::swap(a[best], a[rank]);
    const Integer& pivot = a[rank][k];
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      for (std::size_t j = k + 1; j < ncols; ++j) {
        mpz_mul(t1.get_mpz_t(), pivot.get_mpz_t(), a[i][j].get_mpz_t());
        mpz_mul(t2.get_mpz_t(), a[i][k].get_mpz_t(), a[rank][j].get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][k] = 0;
    }
    previous = pivot;
    ++rank;
  }
  return rank;
}

std::size_t fraction_free_rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  try {
    return fraction_free_rank_impl<SmallInt>(m);
  } catch (const Overflow&) {
    return fraction_free_rank_impl<BigInt>(m);
  }
}

std::size_t exact_rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  if (m.rows() * m.cols() <= kDenseBareissCells) return bareiss_rank(m);
  return fraction_free_rank(m);
}

std::size_t rank_mod_prime(const IntMatrix& m, std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("modulus must be an odd prime");
  if (m.empty()) return 0;
  const std::uint64_t mod = p;
  const std::size_t nrows = m.rows();

  using SparseColumn = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
  std::vector<SparseColumn> basis;  // lowest row first, normalized to 1
  std::vector<std::int64_t> basis_of(nrows, -1);
  std::vector<std::uint64_t> acc(nrows, 0);
  std::vector<char> seen(nrows, 0);
  std::vector<std::uint32_t> touched;
  std::vector<std::uint32_t> heap;
  const auto greater = std::greater<std::uint32_t>();

  for (std::size_t c = m.cols(); c-- > 0;) {
    touched.clear();
    heap.clear();
    for (const auto& e : m.column(c)) {
      const auto r = static_cast<std::uint32_t>(e.row);
      acc[r] = mpz_fdiv_ui(e.value.get_mpz_t(), p);
      seen[r] = 1;
      touched.push_back(r);
      heap.push_back(r);
    }
    std::make_heap(heap.begin(), heap.end(), greater);
    while (!heap.empty()) {
      std::pop_heap(heap.begin(), heap.end(), greater);
      const std::uint32_t r = heap.back();
      heap.pop_back();
      if (acc[r] == 0 || basis_of[r] < 0) continue;
      const std::uint64_t factor = acc[r];
      for (const auto& [rr, v] : basis[static_cast<std::size_t>(basis_of[r])]) {
        if (!seen[rr]) {
          seen[rr] = 1;
          touched.push_back(rr);
          heap.push_back(rr);
          std::push_heap(heap.begin(), heap.end(), greater);
        }
        acc[rr] = (acc[rr] + mod - factor * v % mod) % mod;
      }
    }
    SparseColumn reduced;
    for (std::uint32_t r : touched) {
      if (acc[r] != 0) reduced.emplace_back(r, acc[r]);
      acc[r] = 0;
      seen[r] = 0;
    }
    if (reduced.empty()) continue;
    std::sort(reduced.begin(), reduced.end());
    const std::uint64_t inverse = pow_mod(reduced.front().second, mod - 2, mod);
    for (auto& entry : reduced) entry.second = entry.second * inverse % mod;
    basis_of[reduced.front().first] = static_cast<std::int64_t>(basis.size());
    basis.push_back(std::move(reduced));
  }
  return basis.size();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                              31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // deterministic witness set for 64-bit inputs
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    std::uint64_t x = pow_mod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = static_cast<std::uint64_t>(static_cast<u128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint32_t> random_primes(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist((1U << 30) + 1, (1U << 31) - 1);
  std::vector<std::uint32_t> out;
  while (out.size() < count) {
    const std::uint32_t candidate = dist(rng) | 1U;
    if (is_prime(candidate) && std::find(out.begin(), out.end(), candidate) == out.end()) {
      out.push_back(candidate);
    }
  }
  return out;
}

const std::vector<std::uint32_t>& default_primes() {
  static const std::vector<std::uint32_t> primes = random_primes(3, 0x5eed2025ULL);
  return primes;
}

std::size_t modular_rank(const IntMatrix& m, std::span<const std::uint32_t> primes) {
  if (primes.empty()) throw std::invalid_argument("modular_rank needs at least one prime");
  std::size_t best = 0;
  for (std::uint32_t p : primes) best = std::max(best, rank_mod_prime(m, p));
  return best;
}

std::size_t modular_rank(const IntMatrix& m) { return modular_rank(m, default_primes()); }

RankCrossCheck cross_checked_rank(const IntMatrix& m, std::span<const std::uint32_t> primes) {
  return {exact_rank(m), modular_rank(m, primes)};
}

}  // namespace wlp
