#include <doctest.h>

#include "graphmonads/errors.hpp"
#include "graphmonads/families.hpp"
#include "graphmonads/io.hpp"

using namespace graphmonads;

namespace {
VertexLabel L(const char* text) { return VertexLabel::parse(text); }
}  // namespace

TEST_CASE("parse_edge_list basics") {
  Graph g = parse_edge_list("a b\nb c");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(L("a"), L("b")));
  CHECK(g.adjacent(L("b"), L("c")));
  CHECK(!g.adjacent(L("a"), L("c")));
}

TEST_CASE("comments, blanks, header, crlf") {
  Graph g = parse_edge_list("# a path\n\nvertices: z\na b\r\n  # indented comment\nb c\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.has_vertex(L("z")));
  CHECK(g.neighbors(L("z")).empty());
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_edge_list("a a"), LoopEdge);
  try {
    parse_edge_list("a b\na b c");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_edge_list("a a");
    FAIL("expected LoopEdge");
  } catch (const LoopEdge& e) {
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_edge_list("a {b"), ParseError);
}

TEST_CASE("serialize round trip and determinism") {
  Graph g = parse_edge_list("b c\na b\nvertices: q");
  std::string text = serialize_edge_list(g);
  CHECK(text == "vertices: q\na b\nb c\n");
  CHECK(parse_edge_list(text) == g);
  CHECK(serialize_edge_list(parse_edge_list(text)) == text);
}

TEST_CASE("round trip with structured labels") {
  Graph g = make_graph({L("a~0"), L("{x,y}"), L("(p,q)")},
                       {{L("a~0"), L("{x,y}")}, {L("{x,y}"), L("(p,q)")}});
  CHECK(parse_edge_list(serialize_edge_list(g)) == g);
}

TEST_CASE("dot output is canonical") {
  Graph g = square_with_chord();
  std::string dot = to_dot(g);
  CHECK(dot ==
        "graph {\n"
        "  \"a\";\n"
        "  \"b\";\n"
        "  \"c\";\n"
        "  \"d\";\n"
        "  \"a\" -- \"b\";\n"
        "  \"a\" -- \"c\";\n"
        "  \"b\" -- \"c\";\n"
        "  \"b\" -- \"d\";\n"
        "  \"c\" -- \"d\";\n"
        "}\n");
  CHECK(to_dot(g) == dot);
}

TEST_CASE("dot decorations highlight a matching") {
  Graph g = square_with_chord();
  DotDecorations deco;
  deco.matched_edges.emplace_back(L("a"), L("b"));
  deco.matched_edges.emplace_back(L("c"), L("d"));
  std::string dot = to_dot(g, deco);
  CHECK(dot.find("\"a\" -- \"b\" [style=bold, color=red];") != std::string::npos);
  CHECK(dot.find("\"c\" -- \"d\" [style=bold, color=red];") != std::string::npos);
  CHECK(dot.find("\"b\" -- \"c\" [") == std::string::npos);
}

TEST_CASE("dot decorations colour a triple system") {
  Graph k3 = complete_graph(3);
  DotDecorations deco;
  deco.triples.push_back({L("a"), L("b"), L("c")});
  std::string dot = to_dot(k3, deco);
  CHECK(dot.find("\"a\" -- \"b\" [color=red];") != std::string::npos);
  CHECK(dot.find("\"a\" -- \"c\" [color=red];") != std::string::npos);
  CHECK(dot.find("\"b\" -- \"c\" [color=red];") != std::string::npos);
}
