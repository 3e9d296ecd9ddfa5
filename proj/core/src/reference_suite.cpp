#include "wlp/reference_suite.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "wlp/algebra.hpp"
#include "wlp/errors.hpp"
#include "wlp/graph.hpp"
#include "wlp/indpoly.hpp"
#include "wlp/lefschetz.hpp"
#include "wlp/sampling.hpp"
#include "wlp/tensor.hpp"

namespace wlp {

const std::vector<std::size_t>& tabulated_path_modes() {
  static const std::vector<std::size_t> modes = {0, 1, 1, 1, 2, 2, 2, 2, 3, 3,
                                                 3, 4, 4, 4, 4, 5, 5, 5, 5, 6};
  return modes;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    for (std::size_t k = 0; k < count; ++k) task(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          task(k);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

class Suite {
 public:
  Suite(const ReferenceOptions& options, const std::function<void(const CheckResult&)>& sink)
      : options_(options), sink_(sink) {}

  std::vector<CheckResult> run() {
    record("path-modes", [this] { return path_modes(); });
    record("hilbert-lollipops", [this] { return hilbert_lollipops(); });
    record("path-wlp", [this] { return path_wlp(); });
    record("lollipop-grid", [this] { return lollipop_grid(); });
    record("failure-localization", [this] { return failure_localization_check(); });
    record("tensor-consistency", [this] { return tensor_consistency(); });
    record("block-theorem", [this] { return block_theorem(); });
    record("block-layout", [this] { return block_layout(); });
    record("tensor-witnesses", [this] { return tensor_witnesses(); });
    return results_;
  }

 private:
  // Each check returns an empty string on success, otherwise the first
  // problem found; `summary_` carries the success detail.
  template <class Check>
  void record(const std::string& name, Check check) {
    CheckResult result{name, false, ""};
    summary_.clear();
    try {
      const std::string problem = check();
      result.passed = problem.empty();
      result.detail = result.passed ? summary_ : problem;
    } catch (const std::exception& e) {
      result.detail = std::string("error: ") + e.what();
    }
    if (sink_) sink_(result);
    results_.push_back(std::move(result));
  }

  std::size_t lambda(std::size_t n) const {
    if (n == 0 || n > options_.lambda_table.size()) {
      throw DomainError("no tabulated mode for n = " + std::to_string(n));
    }
    return options_.lambda_table[n - 1];
  }

  std::string path_modes() {
    const std::size_t top = std::min<std::size_t>(20, options_.lambda_table.size());
    for (std::size_t n = 1; n <= top; ++n) {
      const std::size_t computed = mode_of_path(n);
      if (computed != lambda(n)) {
        return "n = " + std::to_string(n) + ": computed mode " + std::to_string(computed) +
               ", table " + std::to_string(lambda(n));
      }
    }
    summary_ = "modes of I(P_n) match for n = 1.." + std::to_string(top);
    return "";
  }

  std::string hilbert_lollipops() {
    const std::vector<std::tuple<std::size_t, std::size_t, IntPolynomial>> cases = {
        {3, 1, IntPolynomial{1, 4, 2}},
        {3, 3, IntPolynomial{1, 6, 9, 2}},
        {3, 4, IntPolynomial{1, 7, 14, 7}},
        {3, 7, IntPolynomial{1, 10, 35, 50, 25, 2}},
        {4, 9, IntPolynomial{1, 13, 63, 140, 140, 51, 3}},
    };
    for (const auto& [m, n, expected] : cases) {
      const IntPolynomial hs = hilbert_series(from_graph(lollipop(m, n)));
      if (hs != expected) {
        return "HS(A(L_{" + std::to_string(m) + "," + std::to_string(n) + "})) = " +
               hs.to_string() + ", expected " + expected.to_string();
      }
    }
    summary_ = "5 Hilbert series match";
    return "";
  }

  std::string path_wlp() {
    std::vector<WlpReport> reports(20);
    parallel_for(20, options_.jobs,
                 [&](std::size_t k) { reports[k] = wlp_report(from_graph(path(k + 1))); });
    for (std::size_t n = 1; n <= 20; ++n) {
      const WlpReport& r = reports[n - 1];
      const std::string who = "P_" + std::to_string(n);
      if (r.has_wlp != expected_path_wlp(n)) {
        return who + ": computed " + (r.has_wlp ? "WLP" : "no WLP");
      }
      const auto fails_at = [&](std::size_t degree, bool surjectivity) {
        const DegreeVerdict& v = r.verdicts.at(degree);
        return surjectivity ? !v.surjective : !v.injective;
      };
      if (n >= 17 && !fails_at(lambda(n), true)) {
        return who + ": surjective at degree lambda_n";
      }
      if (n >= 12 && lambda(n) == lambda(n - 1) + 1 && !fails_at(lambda(n) - 1, false)) {
        return who + ": injective at degree lambda_n - 1";
      }
      if (n == 8 || n == 11 || n == 14 || n == 15 || n == 17) {
        const std::vector<FailingDegree> only{{lambda(n), FailureKind::kSurjectivity}};
        if (r.failing != only) return who + ": failures differ from a single surjectivity failure";
      }
    }
    summary_ = "20 paths classified, failure patterns match";
    return "";
  }

  std::string lollipop_grid() {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t m = 1; m <= options_.max_m; ++m) {
      for (std::size_t n = 1; n <= options_.max_n; ++n) cells.emplace_back(m, n);
    }
    std::vector<char> agree(cells.size(), 0);
    parallel_for(cells.size(), options_.jobs, [&](std::size_t k) {
      agree[k] = evaluate_lollipop(cells[k].first, cells[k].second).agrees() ? 1 : 0;
    });
    const auto hits = static_cast<std::size_t>(std::count(agree.begin(), agree.end(), 1));
    summary_ = "agreements " + std::to_string(hits) + "/" + std::to_string(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (!agree[k]) {
        return summary_ + "; first disagreement at (m, n) = (" + std::to_string(cells[k].first) +
               ", " + std::to_string(cells[k].second) + ")";
      }
    }
    return "";
  }

  std::string failure_localization_check() {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t m : {3, 4, 5}) {
      for (std::size_t n : {8, 11, 14, 15}) cells.emplace_back(m, n);
    }
    std::vector<std::string> problems(cells.size());
    parallel_for(cells.size(), options_.jobs, [&](std::size_t k) {
      const auto [m, n] = cells[k];
      const WlpReport r = wlp_report(from_graph(lollipop(m, n)));
      const std::size_t degree = lambda(n) + 1;
      if (degree >= r.verdicts.size() || r.verdicts[degree].surjective) {
        problems[k] = "L_{" + std::to_string(m) + "," + std::to_string(n) +
                      "}: no surjectivity failure at lambda_n + 1";
      }
    });
    for (const auto& p : problems) {
      if (!p.empty()) return p;
    }
    const WlpReport r49 = wlp_report(from_graph(lollipop(4, 9)));
    if (r49.verdicts.size() < 4 || r49.verdicts[3].surjective) {
      return "L_{4,9}: surjective from degree 3";
    }
    summary_ = "13 localized surjectivity failures confirmed";
    return "";
  }

  std::string tensor_consistency() {
    std::size_t confirmed = 0;
    for (std::size_t m : {3, 4, 5}) {
      for (std::size_t n : {8, 11, 14, 15}) {
        const TensorAlgebra tb = tensor_with_squarefree_block(m - 1, from_graph(path(n)));
        const WlpReport r = wlp_report(from_graph(lollipop(m, n)));
        for (std::size_t i = 1; i < tb.inner.socle_degree(); ++i) {
          const BlockMatrixReport b = verdict_via_theorem(tb, i);
          if (b.predicted.surjective.value_or(true)) continue;
          if (i >= r.verdicts.size() || r.verdicts[i].surjective) {
            return "L_{" + std::to_string(m) + "," + std::to_string(n) +
                   "} surjective at degree " + std::to_string(i) +
                   " although the quotient is not";
          }
          ++confirmed;
        }
      }
    }
    summary_ = std::to_string(confirmed) + " quotient non-surjectivities lift to the lollipop";
    return "";
  }

  std::string block_theorem() {
    std::mt19937_64 rng(options_.seed);
    std::size_t compared = 0;
    std::size_t disagreements = 0;
    std::string first;
    for (std::size_t k = 0; k < options_.random_algebras; ++k) {
      const MonomialAlgebra a = random_monomial_algebra(rng);
      for (std::size_t n = 1; n <= 3; ++n) {
        const TensorAlgebra tb = tensor_with_squarefree_block(n, a);
        for (std::size_t i = 0; i <= a.socle_degree(); ++i) {
          ++compared;
          if (verdict_via_theorem(tb, i).agree) continue;
          if (disagreements++ == 0) {
            first = "algebra #" + std::to_string(k) + " (HS " + hilbert_series(a).to_string() +
                    "), n = " + std::to_string(n) + ", degree " + std::to_string(i);
          }
        }
      }
    }
    const std::string counts =
        std::to_string(compared - disagreements) + "/" + std::to_string(compared) + " degrees agree";
    if (disagreements > 0) return counts + "; first disagreement: " + first;
    summary_ = counts;
    return "";
  }

  std::string block_layout() {
    std::mt19937_64 rng(options_.seed ^ 0x1a70u);
    std::uniform_int_distribution<std::size_t> block(1, 3);
    AlgebraShape shape;
    shape.max_vars = 3;
    shape.max_socle = 4;
    std::size_t matrices = 0;
    for (std::size_t k = 0; k < 20; ++k) {
      const TensorAlgebra tb = tensor_with_squarefree_block(block(rng), random_monomial_algebra(rng, shape));
      for (std::size_t i = 0; i <= tb.inner.socle_degree(); ++i) {
        ++matrices;
        if (assemble_block_layout(tb, i) != block_matrix(tb, i).matrix()) {
          return "pair #" + std::to_string(k) + ", degree " + std::to_string(i) +
                 ": assembled blocks differ from the direct matrix";
        }
      }
    }
    summary_ = std::to_string(matrices) + " block matrices reproduced";
    return "";
  }

  std::string tensor_witnesses() {
    const MonomialAlgebra p8 = from_graph(path(8));
    const std::size_t l8 = lambda(8);
    if (!tensor_failure_witness(p8, l8, p8, l8, MapProperty::kSurjective)) {
      return "A(P_8) (x) A(P_8) surjective at degree " + std::to_string(2 * l8 + 1);
    }

    // pool of failing maps from small random graphs
    struct Failure {
      MonomialAlgebra algebra;
      std::size_t degree;
      bool surjectivity;
    };
    std::mt19937_64 rng(options_.seed ^ 0x7e50u);
    std::vector<Failure> pool;
    for (int attempt = 0; attempt < 400 && pool.size() < 24; ++attempt) {
      const Graph g = random_graph(rng, 6, 9, 0.3);
      MonomialAlgebra a = from_graph(g);
      const WlpReport r = wlp_report(a);
      for (const auto& v : r.verdicts) {
        if (!v.surjective) pool.push_back({a, v.degree, true});
        if (!v.injective) pool.push_back({a, v.degree, false});
      }
    }
    std::size_t witnesses = 0;
    std::vector<char> used(pool.size(), 0);
    for (std::size_t x = 0; x < pool.size() && witnesses < options_.random_witnesses; ++x) {
      for (std::size_t y = x + 1; y < pool.size() && !used[x]; ++y) {
        if (used[y] || pool[x].surjectivity != pool[y].surjectivity) continue;
        const MapProperty property =
            pool[x].surjectivity ? MapProperty::kSurjective : MapProperty::kInjective;
        if (!tensor_failure_witness(pool[x].algebra, pool[x].degree, pool[y].algebra,
                                    pool[y].degree, property)) {
          return "random witness #" + std::to_string(witnesses) + " does not fail";
        }
        used[x] = used[y] = 1;
        ++witnesses;
      }
    }
    if (witnesses < options_.random_witnesses) {
      return "only " + std::to_string(witnesses) + " random witnesses found";
    }
    summary_ = "A(P_8) (x) A(P_8) and " + std::to_string(witnesses) + " random witnesses fail";
    return "";
  }

  const ReferenceOptions& options_;
  const std::function<void(const CheckResult&)>& sink_;
  std::vector<CheckResult> results_;
  std::string summary_;
};

}  // namespace

std::vector<CheckResult> run_reference_suite(
    const ReferenceOptions& options, const std::function<void(const CheckResult&)>& on_result) {
  return Suite(options, on_result).run();
}

}  // namespace wlp
