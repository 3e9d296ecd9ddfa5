#include "wlp/indpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "wlp/errors.hpp"

namespace wlp {

namespace {

class IndependenceSolver {
 public:
  explicit IndependenceSolver(const Graph& g) : g_(g) {}

  IntPolynomial solve(const VertexSet& alive) {
    if (alive.empty()) return IntPolynomial::one();
    auto parts = components(alive);
    if (parts.size() == 1) return solve_connected(alive);
    IntPolynomial product = IntPolynomial::one();
    for (const auto& part : parts) product = product * solve_connected(part);
    return product;
  }

 private:
  std::vector<VertexSet> components(VertexSet remaining) const {
    std::vector<VertexSet> out;
    while (auto seed = remaining.first()) {
      VertexSet component(remaining.universe());
      VertexSet frontier(remaining.universe(), {*seed});
      while (!frontier.empty()) {
        component |= frontier;
        VertexSet next(remaining.universe());
        frontier.for_each([&](std::size_t v) { next |= g_.neighbors(v); });
        next &= remaining;
        next -= component;
        frontier = std::move(next);
      }
      remaining -= component;
      out.push_back(std::move(component));
    }
    return out;
  }

  IntPolynomial solve_connected(const VertexSet& alive) {
    if (auto hit = memo_.find(alive); hit != memo_.end()) return hit->second;

    // Pivot: maximum degree inside the induced subgraph, smallest index on ties.
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool found = false;
    alive.for_each([&](std::size_t v) {
      const std::size_t d = (g_.neighbors(v) & alive).size();
      if (!found || d > best) {
        pivot = v;
        best = d;
        found = true;
      }
    });

    IntPolynomial result;
    if (best == 0) {
      result = IntPolynomial({1, 1});
    } else {
      VertexSet without = alive;
      without.erase(pivot);
      const VertexSet outside_closed = alive - closed_neighborhood(g_, pivot);
      result = solve(without) + solve(outside_closed).shifted(1);
    }
    memo_.emplace(alive, result);
    return result;
  }

  const Graph& g_;
  std::unordered_map<VertexSet, IntPolynomial> memo_;
};

void enumerate_independent(const Graph& g, std::size_t start, VertexSet& current,
                           VertexSet& blocked, std::size_t size,
                           std::vector<std::vector<VertexSet>>& buckets,
                           std::optional<std::size_t> only) {
  if (!only || *only == size) buckets[size].push_back(current);
  if (only && size == *only) return;
  for (std::size_t u = start; u < g.vertex_count(); ++u) {
    if (blocked.contains(u)) continue;
    VertexSet saved = blocked;
    current.insert(u);
    blocked |= closed_neighborhood(g, u);
    enumerate_independent(g, u + 1, current, blocked, size + 1, buckets, only);
    blocked = std::move(saved);
    current.erase(u);
  }
}

}  // namespace

IntPolynomial independence_polynomial(const Graph& g) {
  IndependenceSolver solver(g);
  return solver.solve(VertexSet::full(g.vertex_count()));
}

std::vector<VertexSet> independent_sets_of_size(const Graph& g, std::size_t k) {
  if (k > g.vertex_count()) return {};
  std::vector<std::vector<VertexSet>> buckets(k + 1);
  VertexSet current(g.vertex_count());
  VertexSet blocked(g.vertex_count());
  enumerate_independent(g, 0, current, blocked, 0, buckets, k);
  return std::move(buckets[k]);
}

std::vector<std::vector<VertexSet>> independent_sets_by_size(const Graph& g) {
  std::vector<std::vector<VertexSet>> buckets(g.vertex_count() + 1);
  VertexSet current(g.vertex_count());
  VertexSet blocked(g.vertex_count());
  enumerate_independent(g, 0, current, blocked, 0, buckets, std::nullopt);
  while (buckets.size() > 1 && buckets.back().empty()) buckets.pop_back();
  return buckets;
}

ModeAnalysis mode_analysis(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("mode of the zero polynomial is undefined");
  const auto& a = p.coeffs();
  if (std::any_of(a.begin(), a.end(), [](const Integer& c) { return c < 0; })) {
    throw DomainError("mode analysis needs nonnegative coefficients: " + p.to_string());
  }
  std::size_t k = 0;
  while (k + 1 < a.size() && a[k] <= a[k + 1]) ++k;
  const std::size_t peak_end = k;
  while (k + 1 < a.size() && a[k] >= a[k + 1]) ++k;
  if (k + 1 != a.size()) return {false, std::nullopt};

  // first index attaining the maximum of the rising run
  std::size_t mode = peak_end;
  while (mode > 0 && a[mode - 1] == a[peak_end]) --mode;
  return {true, mode};
}

std::size_t mode_of_path(std::size_t n) {
  if (n == 0) throw DomainError("mode_of_path needs n >= 1");
  const ModeAnalysis analysis = mode_analysis(independence_polynomial(path(n)));
  if (!analysis.is_unimodal) {
    throw std::logic_error("I(P_" + std::to_string(n) + "; t) is not unimodal");
  }
  return *analysis.mode;
}

ModeAnalysis check_unimodal_sum(const IntPolynomial& f, const IntPolynomial& g) {
  const ModeAnalysis mf = mode_analysis(f);
  const ModeAnalysis mg = mode_analysis(g);
  if (!mf.is_unimodal || !mg.is_unimodal) {
    throw DomainError("check_unimodal_sum needs unimodal summands");
  }
  const std::size_t lo = std::min(*mf.mode, *mg.mode);
  const std::size_t hi = std::max(*mf.mode, *mg.mode);
  if (hi - lo > 1) {
    throw DomainError("summand modes " + std::to_string(lo) + " and " + std::to_string(hi) +
                      " differ by more than one");
  }
  ModeAnalysis sum = mode_analysis(f + g);
  if (!sum.is_unimodal || (*sum.mode != lo && *sum.mode != lo + 1)) {
    throw std::logic_error("unimodal-sum lemma violated for " + f.to_string() + " and " +
                           g.to_string());
  }
  return sum;
}

}  // namespace wlp
