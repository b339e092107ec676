#include <gtest/gtest.h>

#include "pprir/ring_io.hpp"
#include "pprir/ideal.hpp"
#include "test_support.hpp"

using namespace pprir;

TEST(RingFile, EachKindParses) {
  EXPECT_EQ(parse_ring_text(R"({"kind":"zn","n":6})").label(), "Z_6");
  EXPECT_EQ(parse_ring_text(R"({"kind":"boolean","atoms":2})").order(), 4u);
  EXPECT_EQ(parse_ring_text(R"({"kind":"boolean","atoms":["p","q","r"]})").name(ElementId(5)), "pr");

  const auto prod = parse_ring_text(R"({"kind":"product","factors":[{"kind":"zn","n":2},{"kind":"zn","n":3}]})");
  EXPECT_EQ(prod.order(), 6u);

  const auto a = parse_ring_text(R"({"kind":"algebra","p":2,"basis_names":["1","x","y"],
                                     "mul":{"x*x":"0","x*y":"0","y*y":"0"}})",
                                 "A");
  EXPECT_EQ(a.order(), 8u);
  EXPECT_EQ(a.label(), "A");

  const auto f4 = parse_ring_text(R"({"kind":"algebra","p":2,"basis_names":["1","x"],"mul":{"x*x":"1+x"}})");
  EXPECT_TRUE(is_field(f4));

  const auto t = parse_ring_text(R"({"kind":"table","order":2,"zero":0,"one":1,
                                     "add":[[0,1],[1,0]],"mul":[[0,0],[0,1]],"element_names":["o","i"]})");
  EXPECT_EQ(t.name(t.one()), "i");
}

TEST(RingFile, CombinationSyntax) {
  const auto r = parse_ring_text(R"({"kind":"algebra","p":3,"basis_names":["1","x"],"mul":{"x*x":"2*x + 1"}})");
  const auto x = r.find("x").value();
  EXPECT_EQ(r.name(r.mul(x, x)), "1+2x");
}

TEST(RingFile, Rejections) {
  EXPECT_THROW(parse_ring_text(R"({"kind":"matrix","n":2})"), FormatError);
  EXPECT_THROW(parse_ring_text(R"({"n":2})"), FormatError);
  EXPECT_THROW(parse_ring_text(R"({"kind":"zn","n":6,"extra":1})"), FormatError);
  EXPECT_THROW(parse_ring_text(R"({"kind":"zn"})"), FormatError);
  EXPECT_THROW(parse_ring_text(R"({"kind":"zn","n":1})"), RingError);
  EXPECT_THROW(parse_ring_text("not json"), FormatError);
  EXPECT_THROW(parse_ring_text(R"({"kind":"table","order":2,"zero":0,"one":1,"add":[[0,1],[1,5]],"mul":[[0,0],[0,1]]})"),
               FormatError);
  EXPECT_THROW(parse_ring_text(R"({"kind":"table","order":2,"zero":0,"one":2,"add":[[0,1],[1,0]],"mul":[[0,0],[0,1]]})"),
               FormatError);
  EXPECT_THROW(parse_ring_text(R"({"kind":"algebra","p":2,"basis_names":["1","x","y"],"mul":{"x*x":"0","y*y":"0"}})"),
               FormatError);  // x*y missing
  EXPECT_THROW(parse_ring_text(R"({"kind":"algebra","p":2,"basis_names":["1","x"],"mul":{"x*x":"z"}})"), FormatError);
  EXPECT_THROW(parse_ring_text(R"({"kind":"product","factors":[]})"), FormatError);
}

TEST(RingFile, AxiomFailureSurfacesFromTables) {
  try {
    parse_ring_text(R"({"kind":"table","order":3,"zero":0,"one":1,
                       "add":[[0,1,2],[1,2,0],[2,0,1]],"mul":[[0,0,0],[0,1,2],[0,2,2]]})");
    FAIL();
  } catch (const AxiomError& e) {
    EXPECT_NE(e.axiom().find("distributivity"), std::string::npos);
  }
}

TEST(RingFile, TableRoundTripPreservesStructure) {
  for (const auto& r : {make_zn(12), make_boolean(3), make_product({make_zn(2), make_zn(4)})}) {
    const auto back = parse_ring(ring_to_json(r));
    EXPECT_EQ(back.tables().add, r.tables().add);
    EXPECT_EQ(back.tables().mul, r.tables().mul);
    EXPECT_EQ(back.element_names(), r.element_names());
    EXPECT_EQ(back.label(), r.label());
  }
}

TEST(ElementList, NestedNamesSplitAtTopLevel) {
  const auto r = make_product({make_zn(2), make_zn(3)});
  const auto ids = parse_element_list(r, "{(0,1),(1,2)}");
  ASSERT_EQ(ids.size(), 2u);
  EXPECT_EQ(r.name(ids[0]), "(0,1)");
  EXPECT_EQ(r.name(ids[1]), "(1,2)");
  EXPECT_TRUE(parse_element_list(r, "{}").empty());
  EXPECT_THROW(parse_element_list(r, "(2,0)"), FormatError);
}

TEST(ElementList, IdealStringParsesBack) {
  const auto a = parse_ring_text(R"({"kind":"algebra","p":2,"basis_names":["1","x","y"],"mul":{"x*x":"0","x*y":"0","y*y":"0"}})");
  const auto m = ideal_generated(a, {a.find("x").value(), a.find("y").value()});
  EXPECT_EQ(m.to_string(), "{0,x,y,x+y}");
  const auto ids = parse_element_list(a, m.to_string());
  EXPECT_EQ(ideal_generated(a, ids), m);
}
