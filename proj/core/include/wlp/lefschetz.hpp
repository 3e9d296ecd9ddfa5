#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wlp/algebra.hpp"
#include "wlp/indpoly.hpp"

namespace wlp {

/// Verdict for l : [A]_i -> [A]_{i+1}.
struct DegreeVerdict {
  std::size_t degree = 0;
  std::size_t h_i = 0;
  std::size_t h_next = 0;
  std::size_t rank = 0;
  bool injective = false;
  bool surjective = false;
  bool maximal_rank = false;
  /// Filled when the report was built with a modular cross-check.
  std::optional<std::size_t> modular_rank;
};

enum class FailureKind { kInjectivity, kSurjectivity, kBoth };

std::string to_string(FailureKind kind);

struct FailingDegree {
  std::size_t degree = 0;
  FailureKind kind = FailureKind::kBoth;

  friend bool operator==(const FailingDegree&, const FailingDegree&) = default;
};

struct WlpReport {
  IntPolynomial hilbert;
  std::size_t socle_degree = 0;
  std::vector<Integer> linear_form;
  std::vector<std::string> var_labels;
  std::vector<DegreeVerdict> verdicts;  // degrees 0..D
  bool has_wlp = false;
  std::vector<FailingDegree> failing;
  bool hilbert_unimodal = false;
  /// Mode of the Hilbert series when it is unimodal.
  std::optional<std::size_t> hilbert_mode;
};

struct WlpOptions {
  /// Also compute each rank modulo these primes (max over primes).
  bool modular_cross_check = false;
  std::vector<std::uint32_t> primes;  // empty means default_primes()
};

/// Scans l = x_1 + ... + x_n over every degree 0..D. For monomial ideals the
/// all-ones form is a Lefschetz element whenever any form is.
WlpReport wlp_report(const MonomialAlgebra& a, const WlpOptions& options = {});

/// Same scan for a given form; DomainError on the zero form or a form of
/// the wrong length.
WlpReport wlp_report_with_form(const MonomialAlgebra& a, const LinearForm& ell,
                               const WlpOptions& options = {});

/// n in {1..7, 9, 10, 13}.
bool expected_path_wlp(std::size_t n);

/// m = 1: n in {1..6, 8, 9, 12}; m = 2: n in {1..5, 7, 8, 11};
/// m >= 3: n in {1, 3, 4, 7}.
bool expected_lollipop_wlp(std::size_t m, std::size_t n);

struct LollipopClassification {
  std::size_t m = 0;
  std::size_t n = 0;
  WlpReport report;
  bool expected = false;
  bool agrees() const noexcept { return report.has_wlp == expected; }
};

class ClassificationMismatch : public std::logic_error {
 public:
  explicit ClassificationMismatch(const LollipopClassification& c);
};

/// Computes the verdict for A(L_{m,n}) and attaches the tabulated one.
LollipopClassification evaluate_lollipop(std::size_t m, std::size_t n,
                                         const WlpOptions& options = {});

/// evaluate_lollipop, throwing ClassificationMismatch on disagreement.
LollipopClassification classify_lollipop(std::size_t m, std::size_t n,
                                         const WlpOptions& options = {});

struct LocalizedFailure {
  std::size_t degree = 0;
  FailureKind kind = FailureKind::kBoth;
  long offset = 0;  // degree minus the supplied mode
  std::string tag;  // e.g. "surjectivity failure at mode+1"
};

/// Tags each failing degree of `report` relative to `mode`. DomainError when
/// the report has the WLP.
std::vector<LocalizedFailure> failure_localization(const WlpReport& report, std::size_t mode);

}  // namespace wlp
