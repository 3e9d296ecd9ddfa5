#pragma once

#include <nlohmann/json.hpp>

#include "wlp/algebra.hpp"
#include "wlp/indpoly.hpp"
#include "wlp/lefschetz.hpp"
#include "wlp/tensor.hpp"

namespace wlp {

/// Coefficients as decimal strings, constant term first.
nlohmann::ordered_json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const nlohmann::ordered_json& j);

/// {polynomial, unimodal, mode}; mode is null when not unimodal.
nlohmann::ordered_json to_json(const IntPolynomial& p, const ModeAnalysis& analysis);

/// {hilbert, socle_degree, wlp, verdicts: [{degree, h_i, h_next, rank,
/// injective, surjective}], failing: [{degree, kind}]} plus linear_form,
/// hilbert_unimodal and hilbert_mode.
nlohmann::ordered_json to_json(const WlpReport& report);

/// {source_degree, target_degree, power, shape: [rows, cols],
/// entries: [[row, col, "value"], ...], rank}.
nlohmann::ordered_json to_json(const GradedMap& map);

/// {degree, predicted, direct, agree}.
nlohmann::ordered_json to_json(const BlockMatrixReport& report);

}  // namespace wlp
