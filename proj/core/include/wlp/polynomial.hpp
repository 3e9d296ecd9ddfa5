#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace wlp {

using Integer = mpz_class;

/// Dense univariate polynomial in t with arbitrary-precision coefficients.
/// Index = degree; trailing zeros are trimmed, so the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial one() { return IntPolynomial({1}); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  Integer coefficient(std::size_t k) const;

  /// Multiplies by t^k.
  IntPolynomial shifted(std::size_t k) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "1 + 13t + 63t^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

}  // namespace wlp
