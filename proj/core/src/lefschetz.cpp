#include "wlp/lefschetz.hpp"

#include <algorithm>

#include "wlp/errors.hpp"
#include "wlp/rank.hpp"

namespace wlp {

std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::kInjectivity:
      return "injectivity";
    case FailureKind::kSurjectivity:
      return "surjectivity";
    case FailureKind::kBoth:
      return "both";
  }
  return "both";
}

WlpReport wlp_report(const MonomialAlgebra& a, const WlpOptions& options) {
  return wlp_report_with_form(a, LinearForm::all_ones(a.num_vars()), options);
}

WlpReport wlp_report_with_form(const MonomialAlgebra& a, const LinearForm& ell,
                               const WlpOptions& options) {
  WlpReport report;
  report.hilbert = hilbert_series(a);
  report.socle_degree = a.socle_degree();
  report.linear_form = ell.coefficients();
  report.var_labels = a.var_labels();
  const ModeAnalysis shape = mode_analysis(report.hilbert);
  report.hilbert_unimodal = shape.is_unimodal;
  report.hilbert_mode = shape.mode;

  const std::span<const std::uint32_t> primes =
      options.primes.empty() ? std::span<const std::uint32_t>(default_primes())
                             : std::span<const std::uint32_t>(options.primes);

  report.has_wlp = true;
  for (std::size_t i = 0; i <= a.socle_degree(); ++i) {
    const GradedMap map = multiplication_map(a, ell, i);
    DegreeVerdict v;
    v.degree = i;
    v.h_i = map.source_dimension();
    v.h_next = map.target_dimension();
    v.rank = map.rank();
    v.injective = map.injective();
    v.surjective = map.surjective();
    v.maximal_rank = v.injective || v.surjective;
    if (options.modular_cross_check) v.modular_rank = modular_rank(map.matrix(), primes);
    if (!v.maximal_rank) {
      report.has_wlp = false;
      const FailureKind kind = v.h_i < v.h_next   ? FailureKind::kInjectivity
                               : v.h_i > v.h_next ? FailureKind::kSurjectivity
                                                  : FailureKind::kBoth;
      report.failing.push_back({i, kind});
    }
    report.verdicts.push_back(v);
  }
  return report;
}

bool expected_path_wlp(std::size_t n) {
  if (n == 0) throw DomainError("path graph needs at least one vertex");
  return n <= 7 || n == 9 || n == 10 || n == 13;
}

bool expected_lollipop_wlp(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw DomainError("lollipop L_{m,n} needs m >= 1 and n >= 1");
  auto in = [n](std::initializer_list<std::size_t> set) {
    return std::find(set.begin(), set.end(), n) != set.end();
  };
  if (m == 1) return n <= 6 || in({8, 9, 12});
  if (m == 2) return n <= 5 || in({7, 8, 11});
  return in({1, 3, 4, 7});
}

ClassificationMismatch::ClassificationMismatch(const LollipopClassification& c)
    : std::logic_error("A(L_{" + std::to_string(c.m) + "," + std::to_string(c.n) + "}): computed " +
                       (c.report.has_wlp ? "WLP" : "no WLP") + ", table says " +
                       (c.expected ? "WLP" : "no WLP")) {}

LollipopClassification evaluate_lollipop(std::size_t m, std::size_t n,
                                         const WlpOptions& options) {
  LollipopClassification out;
  out.m = m;
  out.n = n;
  out.expected = expected_lollipop_wlp(m, n);
  out.report = wlp_report(from_graph(lollipop(m, n)), options);
  return out;
}

LollipopClassification classify_lollipop(std::size_t m, std::size_t n,
                                         const WlpOptions& options) {
  LollipopClassification out = evaluate_lollipop(m, n, options);
  if (!out.agrees()) throw ClassificationMismatch(out);
  return out;
}

std::vector<LocalizedFailure> failure_localization(const WlpReport& report, std::size_t mode) {
  if (report.has_wlp) throw DomainError("failure_localization needs a report without the WLP");
  std::vector<LocalizedFailure> out;
  for (const auto& f : report.failing) {
    LocalizedFailure lf;
    lf.degree = f.degree;
    lf.kind = f.kind;
    lf.offset = static_cast<long>(f.degree) - static_cast<long>(mode);
    std::string where = "mode";
    if (lf.offset > 0) where += "+" + std::to_string(lf.offset);
    if (lf.offset < 0) where += std::to_string(lf.offset);
    lf.tag = to_string(f.kind) + " failure at " + where;
    out.push_back(std::move(lf));
  }
  return out;
}

}  // namespace wlp
