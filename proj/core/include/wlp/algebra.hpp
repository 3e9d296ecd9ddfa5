#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "wlp/graph.hpp"
#include "wlp/matrix.hpp"
#include "wlp/polynomial.hpp"

namespace wlp {

/// Monomial as an exponent vector; exponents are capped at 255.
class Monomial {
 public:
  using Exponent = std::uint8_t;

  Monomial() = default;
  /// The constant monomial 1 in `num_vars` variables.
  explicit Monomial(std::size_t num_vars) : exponents_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}
  /// Throws DomainError on exponents above 255.
  static Monomial from_exponents(std::span<const unsigned> exponents);

  std::size_t num_vars() const noexcept { return exponents_.size(); }
  unsigned degree() const noexcept;
  unsigned exponent(std::size_t j) const { return exponents_.at(j); }
  const std::vector<Exponent>& exponents() const noexcept { return exponents_; }

  bool divides(const Monomial& other) const noexcept;
  Monomial times_variable(std::size_t j) const;
  /// Index of the variable when this is x_j^a with a >= 1.
  std::optional<std::size_t> pure_power_variable() const noexcept;

  std::string to_string(std::span<const std::string> labels) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exponents_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Canonical order of a graded piece: lex with x_1 > x_2 > ..., greatest
/// first. On squarefree monomials this is the lex order of sorted supports.
bool canonical_before(const Monomial& a, const Monomial& b) noexcept;

/// Artinian quotient k[x_1..x_n]/J of a monomial ideal, materialized as the
/// standard monomials of each degree in canonical order.
class MonomialAlgebra {
 public:
  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }
  std::size_t socle_degree() const noexcept { return bases_.size() - 1; }
  /// Basis of [A]_d; empty for d beyond the socle degree.
  const std::vector<Monomial>& basis(std::size_t d) const noexcept;
  std::size_t dimension(std::size_t d) const noexcept { return basis(d).size(); }
  /// Position of a standard monomial in its graded basis.
  std::optional<std::size_t> index_of(const Monomial& m) const;
  bool is_standard(const Monomial& m) const noexcept;
  const std::vector<std::string>& var_labels() const noexcept { return labels_; }

  friend MonomialAlgebra from_graph(const Graph& g);
  friend MonomialAlgebra from_generators(std::size_t num_vars, std::vector<Monomial> gens,
                                         std::vector<std::string> labels);

 private:
  MonomialAlgebra(std::size_t num_vars, std::vector<Monomial> generators,
                  std::vector<std::string> labels, std::vector<std::vector<Monomial>> bases);

  std::size_t num_vars_ = 0;
  std::vector<Monomial> generators_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Monomial>> bases_;
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index_;
};

/// A(G) = k[x_v] / ((x_v^2) + I(G)); the degree-d basis is the d-independent
/// sets of G in lex order.
MonomialAlgebra from_graph(const Graph& g);

/// Minimalizes `gens`, checks that every variable has a pure power among
/// them, and enumerates the standard monomials degree by degree.
/// Throws EmptyGeneratorsError, NotArtinianError, or DomainError.
MonomialAlgebra from_generators(std::size_t num_vars, std::vector<Monomial> gens,
                                std::vector<std::string> labels = {});

IntPolynomial hilbert_series(const MonomialAlgebra& a);

class LinearForm {
 public:
  /// Throws DomainError when every coefficient is zero. The empty form is
  /// the only form on zero variables.
  explicit LinearForm(std::vector<Integer> coefficients);
  static LinearForm all_ones(std::size_t num_vars);

  std::size_t num_vars() const noexcept { return coefficients_.size(); }
  const std::vector<Integer>& coefficients() const noexcept { return coefficients_; }
  bool is_all_ones() const noexcept;
  std::string to_string(std::span<const std::string> labels) const;

 private:
  std::vector<Integer> coefficients_;
};

/// Matrix of multiplication by ell^t from [A]_i to [A]_{i+t}: column c is
/// the image of source basis monomial c written in the target basis.
class GradedMap {
 public:
  GradedMap(std::size_t source_degree, std::size_t power, IntMatrix matrix);

  std::size_t source_degree() const noexcept { return source_degree_; }
  std::size_t target_degree() const noexcept { return source_degree_ + power_; }
  std::size_t power() const noexcept { return power_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  std::size_t source_dimension() const noexcept { return matrix_.cols(); }
  std::size_t target_dimension() const noexcept { return matrix_.rows(); }

  /// Exact rank over Q, computed on first use. Concurrent first calls may
  /// both compute; they publish the same value.
  std::size_t rank() const;

  // A map from the zero space is injective, a map onto the zero space is
  // surjective.
  bool injective() const { return rank() == source_dimension(); }
  bool surjective() const { return rank() == target_dimension(); }
  bool maximal_rank() const { return injective() || surjective(); }

 private:
  std::size_t source_degree_;
  std::size_t power_;
  IntMatrix matrix_;
  std::shared_ptr<std::atomic<std::int64_t>> rank_cache_;
};

/// Multiplication by ell^t : [A]_i -> [A]_{i+t}, built as the product of the
/// t successive degree-one maps. Throws DomainError for t = 0 or a form on
/// the wrong number of variables.
GradedMap multiplication_map(const MonomialAlgebra& a, const LinearForm& ell, std::size_t i,
                             std::size_t t = 1);

/// Parsed generator file: an optional `vars <name>...` line fixing the
/// variable order, then one monomial per line as factors `name` or
/// `name^exp`. Without a `vars` line, variables are ordered by name with
/// numeric suffixes compared as numbers. `#` starts a comment.
struct GeneratorSystem {
  std::size_t num_vars = 0;
  std::vector<std::string> labels;
  std::vector<Monomial> generators;
};

GeneratorSystem parse_generators(std::istream& in);
GeneratorSystem read_generators(const std::filesystem::path& file);
MonomialAlgebra from_generator_system(const GeneratorSystem& system);

}  // namespace wlp
