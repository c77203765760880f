#include <gtest/gtest.h>

#include <sstream>

#include "fatlas/graph_io.hpp"
#include "fatlas/random.hpp"

using namespace fatlas;

TEST(GraphIo, RoundTrip) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_graph(rng.uniform(1, 12), 0.4, rng);
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  }
}

TEST(GraphIo, WriterFormat) { EXPECT_EQ(to_edge_list(cycle(3)), "3 3\n0 1\n0 2\n1 2\n"); }

TEST(GraphIo, CommentsAndBlankLines) {
  const Graph g = parse_edge_list("# triangle\n3 3\n\n0 1\n# middle\n1 2\n2 0\n");
  EXPECT_EQ(g, complete(3));
}

TEST(GraphIo, MalformedInput) {
  auto code_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::NotFat;  // sentinel: no error raised
  };
  EXPECT_EQ(code_of(""), ErrorCode::ParseError);
  EXPECT_EQ(code_of("3 2\n0 1\n"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("3 1\n0 x\n"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("3 1\n0 5\n"), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of("3 1\n1 1\n"), ErrorCode::LoopEdge);
}

TEST(GraphIo, MissingFile) { EXPECT_THROW(load_edge_list("/nonexistent/graph.el"), Error); }
