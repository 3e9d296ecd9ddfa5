#include "wlp/json_io.hpp"

#include "wlp/errors.hpp"

namespace wlp {

using json = nlohmann::ordered_json;

json to_json(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

IntPolynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("polynomial must be a JSON array");
  std::vector<Integer> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw DomainError("polynomial coefficients must be decimal strings");
    Integer value;
    if (value.set_str(c.get<std::string>(), 10) != 0) {
      throw DomainError("bad coefficient `" + c.get<std::string>() + "`");
    }
    coeffs.push_back(std::move(value));
  }
  return IntPolynomial(std::move(coeffs));
}

json to_json(const IntPolynomial& p, const ModeAnalysis& analysis) {
  return {{"polynomial", to_json(p)},
          {"unimodal", analysis.is_unimodal},
          {"mode", analysis.mode ? json(*analysis.mode) : json(nullptr)}};
}

json to_json(const WlpReport& report) {
  json verdicts = json::array();
  for (const auto& v : report.verdicts) {
    json entry = {{"degree", v.degree},       {"h_i", v.h_i},
                  {"h_next", v.h_next},       {"rank", v.rank},
                  {"injective", v.injective}, {"surjective", v.surjective}};
    if (v.modular_rank) entry["modular_rank"] = *v.modular_rank;
    verdicts.push_back(std::move(entry));
  }
  json failing = json::array();
  for (const auto& f : report.failing) {
    failing.push_back({{"degree", f.degree}, {"kind", to_string(f.kind)}});
  }
  json form = json::array();
  for (const auto& c : report.linear_form) form.push_back(c.get_str());
  return {{"hilbert", to_json(report.hilbert)},
          {"socle_degree", report.socle_degree},
          {"wlp", report.has_wlp},
          {"verdicts", std::move(verdicts)},
          {"failing", std::move(failing)},
          {"linear_form", std::move(form)},
          {"hilbert_unimodal", report.hilbert_unimodal},
          {"hilbert_mode", report.hilbert_mode ? json(*report.hilbert_mode) : json(nullptr)}};
}

json to_json(const GradedMap& map) {
  json entries = json::array();
  const IntMatrix& m = map.matrix();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.column(c)) entries.push_back({e.row, c, e.value.get_str()});
  }
  return {{"source_degree", map.source_degree()},
          {"target_degree", map.target_degree()},
          {"power", map.power()},
          {"shape", {m.rows(), m.cols()}},
          {"entries", std::move(entries)},
          {"rank", map.rank()}};
}

json to_json(const BlockMatrixReport& report) {
  json predicted = json::object();
  if (report.predicted.injective) predicted["injective"] = *report.predicted.injective;
  if (report.predicted.surjective) predicted["surjective"] = *report.predicted.surjective;
  if (report.predicted.maximal_rank) predicted["maximal_rank"] = *report.predicted.maximal_rank;
  return {{"degree", report.degree},
          {"predicted", std::move(predicted)},
          {"direct",
           {{"injective", report.direct.injective},
            {"surjective", report.direct.surjective},
            {"maximal_rank", report.direct.maximal_rank()},
            {"rank", report.direct_matrix.rank()},
            {"shape", {report.direct_matrix.target_dimension(),
                       report.direct_matrix.source_dimension()}}}},
          {"agree", report.agree}};
}

}  // namespace wlp
