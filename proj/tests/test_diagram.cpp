#include <gtest/gtest.h>

#include "coxeterlab/diagram.hpp"
#include "coxeterlab/error.hpp"
#include "coxeterlab/fixtures.hpp"
#include "oracles.hpp"

using namespace coxeterlab;

TEST(DiagramText, ParseAllEdgeKinds) {
  const auto d = parse_diagram(
      "# sample\n"
      "vertices: a b c d\n"
      "edge a b label=5\n"
      "edge b c bold\n"
      "edge c d dotted value=3/2\n"
      "edge a d dotted var=rho\n");
  EXPECT_EQ(d.order(), 4);
  EXPECT_EQ(d.edge(0, 1)->m, 5);
  EXPECT_EQ(d.edge(1, 2)->kind, EdgeLabel::Kind::Bold);
  EXPECT_EQ(d.edge(2, 3)->value, mpq_class(3, 2));
  EXPECT_EQ(d.edge(0, 3)->var, "rho");
  EXPECT_EQ(d.edge(0, 2), nullptr);
}

TEST(DiagramText, RoundTripRandom) {
  oracle::RandomDiagrams gen(3);
  for (int t = 0; t < 200; ++t) {
    const auto d = gen.diagram(gen.uniform(1, 7));
    const auto back = parse_diagram(serialize_diagram(d));
    EXPECT_EQ(back.vertices(), d.vertices());
    EXPECT_EQ(back.edges(), d.edges());
    const auto js = diagram_from_json(diagram_to_json(d));
    EXPECT_EQ(js.edges(), d.edges());
  }
}

TEST(DiagramText, ErrorsCarryPosition) {
  try {
    parse_diagram("vertices: a b\nedge a c label=3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 0);
  }
  EXPECT_THROW(parse_diagram("edge a b label=3\n"), ParseError);
  EXPECT_THROW(parse_diagram("vertices: a b\nedge a b label=2\n"), ParseError);
  EXPECT_THROW(parse_diagram("vertices: a b\nedge a b dotted value=1\n"), ParseError);
  EXPECT_THROW(parse_diagram("vertices: a a\n"), ParseError);
  EXPECT_THROW(diagram_from_json("{\"vertices\": 3}"), ParseError);
}

TEST(DiagramModel, EdgeValidation) {
  CoxeterDiagram d({"a", "b", "c"});
  EXPECT_THROW(d.add_edge(0, 0, EdgeLabel::finite(3)), DomainError);
  d.add_edge(0, 1, EdgeLabel::finite(3));
  EXPECT_THROW(d.add_edge(1, 0, EdgeLabel::finite(4)), DomainError);
  EXPECT_THROW(d.add_edge(1, 2, EdgeLabel::finite(2)), DomainError);
  EXPECT_THROW(d.index("z"), DomainError);
  d.set_edge(1, 0, EdgeLabel::finite(4));
  EXPECT_EQ(d.edge(0, 1)->m, 4);
}

TEST(DiagramModel, InducedAndComponents) {
  CoxeterDiagram d({"a", "b", "c", "d", "e"});
  d.add_edge(0, 1, EdgeLabel::finite(3));
  d.add_edge(1, 2, EdgeLabel::bold());
  d.add_edge(3, 4, EdgeLabel::dotted("rho"));
  const auto comps = connected_components(d);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (std::vector<int>{0, 1, 2}));
  const auto sub = induced_diagram(d, {1, 2, 3});
  EXPECT_EQ(sub.order(), 3);
  EXPECT_EQ(sub.edges().size(), 1u);
  EXPECT_EQ(induced(d, std::vector<std::string>{"e", "d"}).diagram().edge(0, 1)->var, "rho");
}

TEST(Fixtures, AllParseAndRoundTrip) {
  for (const auto& name : fixture_names()) {
    const auto d = fixture(name);
    EXPECT_GT(d.order(), 0) << name;
    EXPECT_EQ(parse_diagram(fixture_text(name)).edges(), d.edges()) << name;
  }
  EXPECT_THROW(fixture("nope"), DomainError);
}
