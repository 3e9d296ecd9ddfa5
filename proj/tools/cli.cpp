#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "wlp/algebra.hpp"
#include "wlp/errors.hpp"
#include "wlp/graph.hpp"
#include "wlp/indpoly.hpp"
#include "wlp/json_io.hpp"
#include "wlp/lefschetz.hpp"
#include "wlp/reference_suite.hpp"
#include "wlp/tensor.hpp"

namespace wlp::cli {

namespace {

using json = nlohmann::ordered_json;

struct SourceFlags {
  std::optional<std::size_t> path_n;
  std::optional<std::size_t> complete_m;
  std::vector<std::size_t> lollipop_mn;
  std::string graph_file;
  std::string generators_file;
};

struct Source {
  std::string name;
  std::optional<Graph> graph;
  std::optional<MonomialAlgebra> algebra;
};

struct Common {
  std::string output = "text";
  unsigned jobs = 1;
};

void add_graph_flags(CLI::App& cmd, SourceFlags& flags) {
  cmd.add_option("--path", flags.path_n, "path graph P_n")->check(CLI::PositiveNumber);
  cmd.add_option("--complete", flags.complete_m, "complete graph K_m")->check(CLI::PositiveNumber);
  cmd.add_option("--lollipop", flags.lollipop_mn, "lollipop graph L_{m,n}")
      ->expected(2)
      ->check(CLI::PositiveNumber);
  cmd.add_option("--graph-file", flags.graph_file, "edge-list file");
}

void add_algebra_flags(CLI::App& cmd, SourceFlags& flags) {
  add_graph_flags(cmd, flags);
  cmd.add_option("--generators", flags.generators_file, "monomial generator file");
}

void add_output_flag(CLI::App& cmd, Common& common) {
  cmd.add_option("--output", common.output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

Source resolve(const SourceFlags& f, bool allow_generators) {
  const int count = (f.path_n ? 1 : 0) + (f.complete_m ? 1 : 0) + (f.lollipop_mn.empty() ? 0 : 1) +
                    (f.graph_file.empty() ? 0 : 1) + (f.generators_file.empty() ? 0 : 1);
  if (count != 1) {
    throw DomainError(allow_generators ? "give exactly one of --path, --complete, --lollipop, "
                                         "--graph-file, --generators"
                                       : "give exactly one of --path, --complete, --lollipop, "
                                         "--graph-file");
  }
  Source s;
  if (f.path_n) {
    s.name = "P_" + std::to_string(*f.path_n);
    s.graph = path(*f.path_n);
  } else if (f.complete_m) {
    s.name = "K_" + std::to_string(*f.complete_m);
    s.graph = complete(*f.complete_m);
  } else if (!f.lollipop_mn.empty()) {
    s.name = "L_{" + std::to_string(f.lollipop_mn[0]) + "," + std::to_string(f.lollipop_mn[1]) + "}";
    s.graph = lollipop(f.lollipop_mn[0], f.lollipop_mn[1]);
  } else if (!f.graph_file.empty()) {
    s.name = f.graph_file;
    s.graph = read_edge_list(f.graph_file);
  } else {
    s.name = f.generators_file;
    s.algebra = from_generator_system(read_generators(f.generators_file));
  }
  if (s.graph) {
    s.algebra = from_graph(*s.graph);
    s.name = "A(" + s.name + ")";
  }
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// --- commands -----------------------------------------------------------------

int cmd_indpoly(const SourceFlags& flags, const Common& common, std::ostream& out) {
  const Source src = resolve(flags, false);
  const IntPolynomial p = independence_polynomial(*src.graph);
  const ModeAnalysis shape = mode_analysis(p);
  if (common.output == "json") {
    print_json(out, to_json(p, shape));
  } else {
    out << p.to_string() << "\n";
    out << "unimodal: " << yes_no(shape.is_unimodal) << "\n";
    out << "mode: " << (shape.mode ? std::to_string(*shape.mode) : "none") << "\n";
  }
  return kExitOk;
}

int cmd_hilbert(const SourceFlags& flags, const Common& common, std::ostream& out) {
  const Source src = resolve(flags, true);
  const IntPolynomial hs = hilbert_series(*src.algebra);
  const ModeAnalysis shape = mode_analysis(hs);
  if (common.output == "json") {
    json j = to_json(hs, shape);
    j["socle_degree"] = src.algebra->socle_degree();
    j["num_vars"] = src.algebra->num_vars();
    print_json(out, j);
  } else {
    out << "HS(" << src.name << ") = " << hs.to_string() << "\n";
    out << "socle degree: " << src.algebra->socle_degree() << "\n";
    out << "unimodal: " << yes_no(shape.is_unimodal) << "\n";
    out << "mode: " << (shape.mode ? std::to_string(*shape.mode) : "none") << "\n";
  }
  return kExitOk;
}

void print_report(std::ostream& out, const std::string& name, const WlpReport& r) {
  out << "algebra: " << name << "\n";
  out << "hilbert series: " << r.hilbert.to_string() << "\n";
  out << "socle degree: " << r.socle_degree << "\n";
  const bool show_modular =
      std::any_of(r.verdicts.begin(), r.verdicts.end(), [](const auto& v) { return v.modular_rank; });
  out << std::setw(6) << "degree" << std::setw(9) << "h_i" << std::setw(9) << "h_next"
      << std::setw(9) << "rank";
  if (show_modular) out << std::setw(9) << "rank_p";
  out << std::setw(11) << "injective" << std::setw(12) << "surjective" << "\n";
  for (const auto& v : r.verdicts) {
    out << std::setw(6) << v.degree << std::setw(9) << v.h_i << std::setw(9) << v.h_next
        << std::setw(9) << v.rank;
    if (show_modular) out << std::setw(9) << (v.modular_rank ? *v.modular_rank : 0);
    out << std::setw(11) << yes_no(v.injective) << std::setw(12) << yes_no(v.surjective) << "\n";
  }
  out << "WLP: " << yes_no(r.has_wlp) << "\n";
  for (const auto& f : r.failing) {
    out << "failing: degree " << f.degree << " -> " << f.degree + 1 << " (" << to_string(f.kind)
        << ")\n";
  }
}

int cmd_wlp(const SourceFlags& flags, const Common& common, const std::string& form_text,
            bool cross_check, std::ostream& out) {
  const Source src = resolve(flags, true);
  WlpOptions options;
  options.modular_cross_check = cross_check;
  WlpReport report;
  if (form_text.empty()) {
    report = wlp_report(*src.algebra, options);
  } else {
    std::vector<Integer> coeffs;
    std::stringstream ss(form_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      Integer c;
      if (item.empty() || c.set_str(item, 10) != 0) {
        throw DomainError("bad coefficient `" + item + "` in --form");
      }
      coeffs.push_back(c);
    }
    report = wlp_report_with_form(*src.algebra, LinearForm(std::move(coeffs)), options);
  }
  if (common.output == "json") {
    print_json(out, to_json(report));
  } else {
    print_report(out, src.name, report);
  }
  return report.has_wlp ? kExitOk : kExitNegative;
}

int cmd_blockcheck(const SourceFlags& flags, const Common& common, std::size_t n,
                   std::ostream& out) {
  const Source src = resolve(flags, true);
  const TensorAlgebra tb = tensor_with_squarefree_block(n, *src.algebra);
  std::vector<BlockMatrixReport> reports;
  for (std::size_t i = 0; i <= tb.inner.socle_degree(); ++i) {
    reports.push_back(verdict_via_theorem(tb, i));
  }
  const bool all_agree =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.agree; });
  if (common.output == "json") {
    json rows = json::array();
    for (const auto& r : reports) rows.push_back(to_json(r));
    print_json(out, {{"n", n},
                     {"inner_hilbert", to_json(hilbert_series(tb.inner))},
                     {"hilbert", to_json(hilbert_series(tb.realized))},
                     {"degrees", rows},
                     {"agree", all_agree}});
  } else {
    out << "B = k[" << (n == 1 ? std::string("x_1") : "x_1..x_" + std::to_string(n)) << "]/(x)^2 (x) " << src.name << "\n";
    out << "HS(B) = " << hilbert_series(tb.realized).to_string() << "\n";
    out << std::setw(6) << "degree" << std::setw(10) << "shape" << std::setw(7) << "rank"
        << std::setw(12) << "predicted" << std::setw(12) << "direct" << std::setw(7) << "agree"
        << "\n";
    for (const auto& r : reports) {
      std::string predicted;
      if (r.predicted.injective) predicted += *r.predicted.injective ? "I" : "i";
      if (r.predicted.surjective) predicted += *r.predicted.surjective ? "S" : "s";
      if (r.predicted.maximal_rank) predicted += *r.predicted.maximal_rank ? "M" : "m";
      std::string direct = std::string(r.direct.injective ? "I" : "i") +
                           (r.direct.surjective ? "S" : "s");
      const std::string shape = std::to_string(r.direct_matrix.target_dimension()) + "x" +
                                std::to_string(r.direct_matrix.source_dimension());
      out << std::setw(6) << r.degree << std::setw(10) << shape << std::setw(7)
          << r.direct_matrix.rank() << std::setw(12) << predicted << std::setw(12) << direct
          << std::setw(7) << yes_no(r.agree) << "\n";
    }
    out << "(I/i injective yes/no, S/s surjective yes/no, M/m maximal rank yes/no)\n";
    out << "theorem agrees: " << yes_no(all_agree) << "\n";
  }
  return all_agree ? kExitOk : kExitNegative;
}

int cmd_classify(const std::string& m_text, const std::string& n_text, const Common& common,
                 std::ostream& out) {
  const auto [m_lo, m_hi] = parse_range(m_text);
  const auto [n_lo, n_hi] = parse_range(n_text);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t m = m_lo; m <= m_hi; ++m) {
    for (std::size_t n = n_lo; n <= n_hi; ++n) cells.emplace_back(m, n);
  }
  std::vector<std::optional<LollipopClassification>> results(cells.size());
  parallel_for(cells.size(), common.jobs, [&](std::size_t k) {
    results[k] = evaluate_lollipop(cells[k].first, cells[k].second);
  });
  std::size_t agreements = 0;
  for (const auto& r : results) agreements += r->agrees() ? 1 : 0;

  if (common.output == "json") {
    json rows = json::array();
    for (const auto& r : results) {
      json failing = json::array();
      for (const auto& f : r->report.failing) {
        failing.push_back({{"degree", f.degree}, {"kind", to_string(f.kind)}});
      }
      rows.push_back({{"m", r->m},
                      {"n", r->n},
                      {"computed", r->report.has_wlp},
                      {"expected", r->expected},
                      {"agree", r->agrees()},
                      {"hilbert", to_json(r->report.hilbert)},
                      {"failing", failing}});
    }
    print_json(out, {{"cells", rows}, {"agreements", agreements}, {"total", cells.size()}});
  } else {
    out << std::setw(4) << "m" << std::setw(5) << "n" << std::setw(10) << "computed"
        << std::setw(10) << "expected" << std::setw(7) << "agree" << "  failing\n";
    for (const auto& r : results) {
      std::string failing;
      for (const auto& f : r->report.failing) {
        if (!failing.empty()) failing += ", ";
        failing += std::to_string(f.degree) + ":" + to_string(f.kind);
      }
      out << std::setw(4) << r->m << std::setw(5) << r->n << std::setw(10)
          << (r->report.has_wlp ? "WLP" : "no") << std::setw(10) << (r->expected ? "WLP" : "no")
          << std::setw(7) << yes_no(r->agrees()) << "  " << (failing.empty() ? "-" : failing)
          << "\n";
    }
    out << "agreements " << agreements << "/" << cells.size() << "\n";
  }
  return agreements == cells.size() ? kExitOk : kExitNegative;
}

int cmd_verify(const ReferenceOptions& options, const Common& common, std::ostream& out) {
  const bool text = common.output == "text";
  const auto results = run_reference_suite(options, [&](const CheckResult& r) {
    if (text) out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << std::endl;
  });
  const bool all =
      std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (!text) {
    json checks = json::array();
    for (const auto& r : results) {
      checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    print_json(out, {{"checks", checks}, {"passed", all}, {"seed", options.seed}});
  } else {
    const auto passed = std::count_if(results.begin(), results.end(),
                                      [](const auto& r) { return r.passed; });
    out << passed << "/" << results.size() << " checks passed\n";
  }
  return all ? kExitOk : kExitNegative;
}

std::vector<std::size_t> parse_table(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) {
      throw DomainError("bad entry `" + item + "` in --lambda-table");
    }
    out.push_back(std::stoul(item));
  }
  if (out.size() != 20) throw DomainError("--lambda-table needs 20 comma-separated modes");
  return out;
}

}  // namespace

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto all_digits = [](const std::string& s) {
    return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), ::isdigit);
  };
  const auto dots = text.find("..");
  const std::string lo = dots == std::string::npos ? text : text.substr(0, dots);
  const std::string hi = dots == std::string::npos ? text : text.substr(dots + 2);
  if (!all_digits(lo) || !all_digits(hi)) throw DomainError("bad range `" + text + "`");
  const std::size_t a = std::stoul(lo);
  const std::size_t b = std::stoul(hi);
  if (a == 0 || a > b) throw DomainError("empty or non-positive range `" + text + "`");
  return {a, b};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak Lefschetz property of graph algebras A(G) and Artinian monomial algebras",
               "wlp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "wlp 0.3.0");

  Common common;
  SourceFlags flags;

  auto* indpoly = app.add_subcommand("indpoly", "independence polynomial I(G; t) and its mode");
  add_graph_flags(*indpoly, flags);
  add_output_flag(*indpoly, common);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of A(G) or a monomial algebra");
  add_algebra_flags(*hilbert, flags);
  add_output_flag(*hilbert, common);

  std::string form_text;
  bool cross_check = false;
  auto* wlp = app.add_subcommand("wlp", "per-degree rank table and WLP verdict");
  add_algebra_flags(*wlp, flags);
  add_output_flag(*wlp, common);
  wlp->add_option("--form", form_text, "comma-separated integer linear form (default all ones)");
  wlp->add_flag("--cross-check", cross_check, "also compute every rank modulo random primes");

  std::size_t block_n = 1;
  auto* blockcheck =
      app.add_subcommand("blockcheck", "compare rank verdicts on k[x]/(x)^2 (x) A with A");
  add_algebra_flags(*blockcheck, flags);
  add_output_flag(*blockcheck, common);
  blockcheck->add_option("--n", block_n, "number of x-variables")->check(CLI::PositiveNumber);

  std::string m_range;
  std::string n_range;
  auto* classify = app.add_subcommand("classify", "WLP of A(L_{m,n}) over a grid vs the table");
  classify->add_option("--m", m_range, "range a..b")->required();
  classify->add_option("--n", n_range, "range a..b")->required();
  classify->add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);
  add_output_flag(*classify, common);

  ReferenceOptions reference;
  std::string lambda_text;
  auto* verify = app.add_subcommand("verify-paper", "run the reference checks");
  verify->add_option("--seed", reference.seed, "seed for randomized checks");
  verify->add_option("--lambda-table", lambda_text, "20 comma-separated modes replacing the table");
  verify->add_option("--max-m", reference.max_m, "largest m in the lollipop grid")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-n", reference.max_n, "largest n in the lollipop grid")
      ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", reference.jobs, "worker threads")->check(CLI::PositiveNumber);
  add_output_flag(*verify, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (indpoly->parsed()) return cmd_indpoly(flags, common, out);
    if (hilbert->parsed()) return cmd_hilbert(flags, common, out);
    if (wlp->parsed()) return cmd_wlp(flags, common, form_text, cross_check, out);
    if (blockcheck->parsed()) return cmd_blockcheck(flags, common, block_n, out);
    if (classify->parsed()) return cmd_classify(m_range, n_range, common, out);
    if (verify->parsed()) {
      if (!lambda_text.empty()) reference.lambda_table = parse_table(lambda_text);
      return cmd_verify(reference, common, out);
    }
  } catch (const std::exception& e) {
    err << "wlp: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace wlp::cli
