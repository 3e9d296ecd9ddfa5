#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wlp {

/// Subset of {0, ..., universe-1} stored as a packed bit mask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<std::size_t> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(std::size_t v) const noexcept;
  void insert(std::size_t v);
  void erase(std::size_t v) noexcept;

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  std::optional<std::size_t> first() const noexcept;
  std::vector<std::size_t> members() const;

  bool intersects(const VertexSet& other) const noexcept;
  VertexSet& operator|=(const VertexSet& other) noexcept;
  VertexSet& operator&=(const VertexSet& other) noexcept;
  VertexSet& operator-=(const VertexSet& other) noexcept;
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        f(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
      }
    }
  }

  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order on sorted member lists, the canonical order for
/// independent sets of equal size.
bool lex_less(const VertexSet& a, const VertexSet& b);

/// Simple undirected graph on vertices 0..n-1; immutable after construction.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept;
  const VertexSet& neighbors(std::size_t v) const;
  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const { return neighbors(v).size(); }
  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Display name of v; "x_{v+1}" when no label map was attached.
  std::string label(std::size_t v) const;

  friend Graph custom(std::size_t vertex_count,
                      const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  friend Graph lollipop(std::size_t m, std::size_t n);
  friend Graph disjoint_union(const Graph& g1, const Graph& g2);

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<std::string> labels_;
};

Graph path(std::size_t n);
Graph complete(std::size_t m);
/// K_m on x_1..x_m (indices 0..m-1), P_n on y_1..y_n (indices m..m+n-1),
/// bridge x_m -- y_1.
Graph lollipop(std::size_t m, std::size_t n);
Graph custom(std::size_t vertex_count,
             const std::vector<std::pair<std::size_t, std::size_t>>& edges);
Graph disjoint_union(const Graph& g1, const Graph& g2);

bool is_independent(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, std::size_t v);

/// Edge-list text: `n <count>` then `<u> <v>` per line, `#` starts a comment.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& file);

}  // namespace wlp

template <>
struct std::hash<wlp::VertexSet> {
  std::size_t operator()(const wlp::VertexSet& s) const noexcept { return s.hash(); }
};
