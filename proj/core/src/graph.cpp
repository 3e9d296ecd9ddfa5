#include "wlp/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "wlp/errors.hpp"

namespace wlp {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t universe) {
  return (universe + kWordBits - 1) / kWordBits;
}

}  // namespace

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : VertexSet(universe) {
  for (std::size_t v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (const std::size_t tail = universe % kWordBits; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

bool VertexSet::contains(std::size_t v) const noexcept {
  return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
}

void VertexSet::insert(std::size_t v) {
  if (v >= universe_) {
    throw DomainError("vertex " + std::to_string(v) + " outside universe of size " +
                      std::to_string(universe_));
  }
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(std::size_t v) noexcept {
  if (v < universe_) words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<std::size_t> VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each([&](std::size_t v) { out.push_back(v); });
  return out;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= w < other.words_.size() ? other.words_[w] : 0;
  }
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::size_t VertexSet::hash() const noexcept {
  // FNV-1a over the words
  std::uint64_t h = 1469598103934665603ULL ^ universe_;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for_each([&](std::size_t v) {
    if (!first_member) out += ",";
    out += std::to_string(v);
    first_member = false;
  });
  return out + "}";
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

// --- Graph -----------------------------------------------------------------

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& nb : adjacency_) twice += nb.size();
  return twice / 2;
}

const VertexSet& Graph::neighbors(std::size_t v) const {
  if (v >= adjacency_.size()) {
    throw DomainError("vertex " + std::to_string(v) + " out of range");
  }
  return adjacency_[v];
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  return neighbors(u).contains(v);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    adjacency_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

std::string Graph::label(std::size_t v) const {
  if (v >= adjacency_.size()) {
    throw DomainError("vertex " + std::to_string(v) + " out of range");
  }
  return labels_.empty() ? "x_" + std::to_string(v + 1) : labels_[v];
}

Graph custom(std::size_t vertex_count,
             const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g;
  g.adjacency_.assign(vertex_count, VertexSet(vertex_count));
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") has an endpoint outside [0, " + std::to_string(vertex_count) + ")");
    }
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].insert(v);
    g.adjacency_[v].insert(u);
  }
  return g;
}

Graph path(std::size_t n) {
  if (n == 0) throw DomainError("path graph needs at least one vertex");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return custom(n, edges);
}

Graph complete(std::size_t m) {
  if (m == 0) throw DomainError("complete graph needs at least one vertex");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) edges.emplace_back(i, j);
  }
  return custom(m, edges);
}

Graph lollipop(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw DomainError("lollipop L_{m,n} needs m >= 1 and n >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) edges.emplace_back(i, j);
  }
  edges.emplace_back(m - 1, m);
  for (std::size_t k = 0; k + 1 < n; ++k) edges.emplace_back(m + k, m + k + 1);
  Graph g = custom(m + n, edges);
  g.labels_.reserve(m + n);
  for (std::size_t i = 1; i <= m; ++i) g.labels_.push_back("x_" + std::to_string(i));
  for (std::size_t j = 1; j <= n; ++j) g.labels_.push_back("y_" + std::to_string(j));
  return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const std::size_t shift = g1.vertex_count();
  auto edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + shift, v + shift);
  Graph g = custom(shift + g2.vertex_count(), edges);
  if (g1.has_labels() || g2.has_labels()) {
    for (std::size_t v = 0; v < g1.vertex_count(); ++v) g.labels_.push_back(g1.label(v));
    for (std::size_t v = 0; v < g2.vertex_count(); ++v) {
      g.labels_.push_back(g2.label(v) + "'");
    }
  }
  return g;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool independent = true;
  s.for_each([&](std::size_t v) {
    if (independent && g.neighbors(v).intersects(s)) independent = false;
  });
  return independent;
}

VertexSet closed_neighborhood(const Graph& g, std::size_t v) {
  VertexSet out = g.neighbors(v);
  out.insert(v);
  return out;
}

Graph parse_edge_list(std::istream& in) {
  std::optional<std::size_t> count;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    long long a = -1;
    long long b = -1;
    if (!count) {
      if (token != "n" || !(fields >> a) || a < 0) {
        throw ParseError("expected header `n <vertex_count>`", line_no);
      }
      count = static_cast<std::size_t>(a);
    } else {
      std::istringstream pair(line);
      if (!(pair >> a >> b) || a < 0 || b < 0) {
        throw ParseError("expected `<u> <v>` with non-negative integers", line_no);
      }
      edges.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      fields.swap(pair);
    }
    if (fields >> token) throw ParseError("unexpected token `" + token + "`", line_no);
  }
  if (!count) throw ParseError("missing header `n <vertex_count>`", line_no);
  try {
    return custom(*count, edges);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line_no);
  }
}

Graph read_edge_list(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DomainError("cannot open graph file " + file.string());
  return parse_edge_list(in);
}

}  // namespace wlp
