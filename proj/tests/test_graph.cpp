#include <doctest.h>

#include <sstream>

#include "wlp/errors.hpp"
#include "wlp/graph.hpp"

using namespace wlp;

TEST_CASE("VertexSet basic operations") {
  VertexSet s(70, {0, 3, 69});
  CHECK(s.size() == 3);
  CHECK(s.contains(69));
  CHECK_FALSE(s.contains(68));
  CHECK(s.first() == 0u);
  CHECK(s.members() == std::vector<std::size_t>{0, 3, 69});
  CHECK_THROWS_AS(s.insert(70), DomainError);

  VertexSet t(70, {3, 4});
  CHECK(s.intersects(t));
  VertexSet u = s;
  u -= t;
  CHECK(u.members() == std::vector<std::size_t>{0, 69});
  u |= t;
  CHECK(u.size() == 4);
  u &= VertexSet(70, {4, 69});
  CHECK(u.members() == std::vector<std::size_t>{4, 69});
  CHECK(VertexSet::full(65).size() == 65);
  CHECK(VertexSet(5).empty());
  CHECK(s.to_string() == "{0,3,69}");
  CHECK(std::hash<VertexSet>{}(s) == std::hash<VertexSet>{}(VertexSet(70, {69, 3, 0})));
}

TEST_CASE("lex order compares sorted member lists") {
  CHECK(lex_less(VertexSet(5, {0, 4}), VertexSet(5, {1, 2})));
  CHECK(lex_less(VertexSet(5, {0}), VertexSet(5, {0, 1})));
  CHECK_FALSE(lex_less(VertexSet(5, {2}), VertexSet(5, {1, 4})));
}

TEST_CASE("graph families") {
  SUBCASE("path") {
    const Graph g = path(5);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 4);
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.label(0) == "x_1");
    CHECK_THROWS_AS(path(0), DomainError);
  }
  SUBCASE("complete") {
    const Graph g = complete(6);
    CHECK(g.edge_count() == 15);
    for (std::size_t v = 0; v < 6; ++v) CHECK(g.degree(v) == 5);
  }
  SUBCASE("lollipop") {
    const Graph g = lollipop(4, 9);
    CHECK(g.vertex_count() == 13);
    CHECK(g.edge_count() == 6 + 9);
    CHECK(g.adjacent(3, 4));
    CHECK_FALSE(g.adjacent(2, 4));
    CHECK(g.label(3) == "x_4");
    CHECK(g.label(4) == "y_1");
    CHECK(g.label(12) == "y_9");
    CHECK_THROWS_AS(lollipop(0, 3), DomainError);
    CHECK_THROWS_AS(lollipop(3, 0), DomainError);
  }
  SUBCASE("lollipop with a one-vertex clique is a path") {
    for (std::size_t n = 1; n <= 6; ++n) CHECK(lollipop(1, n).edges() == path(n + 1).edges());
    for (std::size_t n = 1; n <= 6; ++n) CHECK(lollipop(2, n).edges() == path(n + 2).edges());
  }
  SUBCASE("custom") {
    const Graph g = custom(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(custom(3, {{0, 3}}), DomainError);
    CHECK_THROWS_AS(custom(3, {{1, 1}}), DomainError);
    CHECK(custom(0, {}).vertex_count() == 0);
  }
  SUBCASE("disjoint union") {
    const Graph g = disjoint_union(path(3), complete(2));
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(3, 4));
    CHECK_FALSE(g.adjacent(2, 3));
    const Graph h = disjoint_union(lollipop(2, 1), lollipop(2, 1));
    CHECK(h.label(3) == "x_1'");
  }
}

TEST_CASE("independence and neighborhoods") {
  const Graph g = path(4);
  CHECK(is_independent(g, VertexSet(4, {0, 2})));
  CHECK(is_independent(g, VertexSet(4, {0, 3})));
  CHECK_FALSE(is_independent(g, VertexSet(4, {1, 2})));
  CHECK(closed_neighborhood(g, 1).members() == std::vector<std::size_t>{0, 1, 2});
  CHECK_THROWS_AS(g.neighbors(4), DomainError);
}

TEST_CASE("edge-list parsing") {
  SUBCASE("valid file with comments") {
    std::istringstream in("# a triangle plus a pendant\nn 4\n0 1\n1 2  # inline\n\n2 0\n2 3\n");
    const Graph g = parse_edge_list(in);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
  }
  SUBCASE("empty graph") {
    std::istringstream in("n 3\n");
    CHECK(parse_edge_list(in).edge_count() == 0);
  }
  SUBCASE("errors carry line numbers") {
    std::istringstream missing("0 1\n");
    CHECK_THROWS_AS(parse_edge_list(missing), ParseError);
    std::istringstream range("n 2\n0 5\n");
    try {
      parse_edge_list(range);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    std::istringstream junk("n 2\n0 1 extra\n");
    CHECK_THROWS_AS(parse_edge_list(junk), ParseError);
    std::istringstream loop("n 2\n1 1\n");
    CHECK_THROWS_AS(parse_edge_list(loop), ParseError);
    std::istringstream negative("n 2\n-1 0\n");
    CHECK_THROWS_AS(parse_edge_list(negative), ParseError);
    std::istringstream empty("");
    CHECK_THROWS_AS(parse_edge_list(empty), ParseError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(read_edge_list("/nonexistent/graph.txt"), DomainError);
  }
}
