#include <doctest.h>

#include "spectree/enumerate.hpp"
#include "spectree/error.hpp"
#include "spectree/graph6.hpp"

using namespace spectree;

TEST_CASE("worked decoding: DQc is a relabeled P5") {
  const Graph g = parse_graph6("DQc");
  CHECK(g.n == 5);
  CHECK(g.edges.size() == 4);
  REQUIRE(is_tree(g));
  CHECK(isomorphic(Tree(g), path(5)));
}

TEST_CASE("round trips") {
  CHECK(isomorphic(Tree(parse_graph6(emit_graph6(path(2)))), path(2)));
  const Tree s = spider(4, 2);
  CHECK(isomorphic(Tree(parse_graph6(emit_graph6(s))), s));
  // Canonical encodings round-trip byte-exactly.
  for (int n = 1; n <= 7; ++n) {
    TreeStream stream(n);
    while (auto t = stream.next()) {
      const std::string line = emit_graph6(*t);
      CHECK(emit_graph6(parse_graph6(line)) == line);
    }
  }
  // Non-tree graph with an order beyond the single-byte header.
  Graph big;
  big.n = 70;
  for (int i = 1; i < 70; ++i) big.edges.emplace_back(0, i);
  big.edges.emplace_back(1, 2);
  const std::string line = emit_graph6(big);
  const Graph back = parse_graph6(line);
  CHECK(back.n == 70);
  CHECK(back.edges.size() == big.edges.size());
  CHECK(emit_graph6(back) == line);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_graph6(""), Error);
  CHECK_THROWS_AS(parse_graph6("DQ"), Error);       // truncated body
  CHECK_THROWS_AS(parse_graph6("DQcc"), Error);     // oversized body
  CHECK_THROWS_AS(parse_graph6("D\x1f" "c"), Error);  // character below 63
  CHECK_THROWS_AS(parse_graph6("B\x7f"), Error);    // character above 126
  // n=3 uses 3 of 6 body bits; the rest must be zero padding.
  CHECK_NOTHROW(parse_graph6("Bw"));  // K3
  bool padding_rejected = false;
  try {
    parse_graph6("BF");  // low (padding) bits set
  } catch (const Error& e) {
    padding_rejected = e.kind() == ErrorKind::kParse;
  }
  CHECK(padding_rejected);
}

TEST_CASE("edge list convenience format") {
  const Graph g = parse_edge_list("el 4 0 1 1 2 2 3");
  CHECK(g.n == 4);
  CHECK(is_tree(g));
  CHECK(isomorphic(Tree(g), path(4)));
  CHECK_THROWS_AS(parse_edge_list("el 4 0 1 2"), Error);
  CHECK_THROWS_AS(parse_edge_list("el 3 0 5"), Error);
  CHECK(parse_graph_line("el 2 0 1").n == 2);
  CHECK(parse_graph_line("A_").n == 2);
}

TEST_CASE("report codes are ingestible") {
  // Violation/witness entries cite trees by canonical code; feeding such a
  // code back through ingestion reproduces the tree.
  const Tree t = spider(4, 2);
  const Graph g = parse_graph_line(canonical_code(t));
  CHECK(is_tree(g));
  CHECK(isomorphic(Tree(g), t));
  // nauty-style prefix is tolerated.
  CHECK(parse_graph_line(">>graph6<<A_").n == 2);
}
