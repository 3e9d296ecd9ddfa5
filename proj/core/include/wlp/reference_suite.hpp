#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace wlp {

/// Modes of I(P_n; t) for n = 1..20 as tabulated in the literature.
const std::vector<std::size_t>& tabulated_path_modes();

struct ReferenceOptions {
  std::uint64_t seed = 0x57a7e;
  /// Mode table consulted by every check that needs lambda_n; index n - 1.
  std::vector<std::size_t> lambda_table = tabulated_path_modes();
  std::size_t max_m = 8;
  std::size_t max_n = 20;
  std::size_t random_algebras = 50;
  std::size_t random_witnesses = 5;
  unsigned jobs = 1;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the named reference checks in a fixed order: path-modes,
/// hilbert-lollipops, path-wlp, lollipop-grid, failure-localization,
/// tensor-consistency, block-theorem, block-layout, tensor-witnesses.
/// `on_result` sees each result as soon as it is available.
std::vector<CheckResult> run_reference_suite(
    const ReferenceOptions& options,
    const std::function<void(const CheckResult&)>& on_result = nullptr);

/// Runs `task(k)` for k in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task);

}  // namespace wlp
