#include <gtest/gtest.h>

#include <sstream>

#include "coordgame/error.hpp"
#include "coordgame/io.hpp"
#include "helpers.hpp"

using namespace coordgame;
using testing_support::profile;

namespace {

int error_line(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(ParseInstance, Fig3Text) {
  Instance inst = parse_instance(
      "coordgame 1\n"
      "# four cycle\n"
      "name fig3\n"
      "node 1 a b\nnode 2 a b\nnode 3 b a\nnode 4 a\n"
      "edge 1 2\nedge 2 3\nedge 3 4\nedge 4 1\n");
  EXPECT_EQ(inst.game.node_count(), 4);
  EXPECT_EQ(inst.game.graph().edge_count(), 4);
  EXPECT_EQ(inst.name, "fig3");
  EXPECT_EQ(inst.game.assignment().colors_of(3).size(), 1u);
  EXPECT_FALSE(inst.profile.has_value());
}

TEST(ParseInstance, TrivialGame) {
  Instance inst = parse_instance("coordgame 1\nnode 7 red\n");
  EXPECT_EQ(inst.game.node_count(), 1);
  EXPECT_EQ(inst.labels, std::vector<std::int64_t>{7});
}

TEST(ParseInstance, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("node 1 a\n"), 1);
  EXPECT_EQ(error_line("coordgame 2\n"), 1);
  EXPECT_EQ(error_line("coordgame 1\nnode 1\n"), 2);
  EXPECT_EQ(error_line("coordgame 1\nnode 1 a a\n"), 2);
  EXPECT_EQ(error_line("coordgame 1\nnode 1 a\nnode 1 b\n"), 3);
  EXPECT_EQ(error_line("coordgame 1\nnode 1 a\nedge 1 2\n"), 3);
  EXPECT_EQ(error_line("coordgame 1\nnode 1 a\nedge 1 1\n"), 3);
  EXPECT_EQ(error_line("coordgame 1\nnode 1 a\nnode 2 a\nedge 1 2\nedge 2 1\n"), 5);
  EXPECT_EQ(error_line("coordgame 1\nnode 1 a\nnode 2 b\nprofile 1 b\nprofile 2 b\n"), 4);
  EXPECT_EQ(error_line("coordgame 1\nnode 1 a\nnode 2 b\nprofile 1 a\n"), 4);
  EXPECT_EQ(error_line("coordgame 1\nvertex 1 a\n"), 2);
  EXPECT_EQ(error_line("coordgame 1\nnode x a\n"), 2);
}

TEST(Serialize, BuiltinsRoundTrip) {
  for (const auto& name : builtin_names()) {
    Instance inst = *builtin_instance(name);
    const std::string text = serialize_instance(inst);
    Instance back = parse_instance(text);
    EXPECT_EQ(serialize_instance(back), text) << name;
    EXPECT_EQ(back.game.graph(), inst.game.graph()) << name;
    EXPECT_EQ(back.labels, inst.labels) << name;
    ASSERT_EQ(back.profile.has_value(), inst.profile.has_value());
    if (inst.profile) EXPECT_EQ(format_profile(back, *back.profile), format_profile(inst, *inst.profile));
  }
}

TEST(Serialize, CanonicalOrderIgnoresInputOrder) {
  Instance a = parse_instance("coordgame 1\nnode 2 b a\nnode 1 a\nedge 2 1\n");
  Instance b = parse_instance("coordgame 1\nnode 1 a\nnode 2 a b\nedge 1 2\n");
  EXPECT_EQ(serialize_instance(a), serialize_instance(b));
}

TEST(Profiles, ParseAndFormat) {
  Instance inst = *builtin_instance("fig3");
  JointStrategy s = parse_profile(inst, "coordgame 1\nprofile 1 a\nprofile 2 a\nprofile 3 a\nprofile 4 a\n");
  EXPECT_EQ(social_welfare(inst.game, s), 8);
  EXPECT_EQ(format_profile(inst, s), "(a,a,a,a)");
  EXPECT_EQ(parse_profile(inst, serialize_profile(inst, s)), s);
  EXPECT_THROW(parse_profile(inst, "profile 1 a\n"), ParseError);
  EXPECT_THROW(parse_profile(inst, "profile 1 a\nprofile 2 a\nprofile 3 a\nprofile 4 b\n"),
               ParseError);
}

TEST(Witness, Formats) {
  Instance inst = fig1();
  const NodeId k[] = {0, 3, 4, 5, 6};
  DeviationReport d = describe_deviation(inst.game, *inst.profile, k, inst.game.palette().id("c"));
  EXPECT_EQ(format_witness(inst, d), "{1,4,5,6,7}->c");
  Instance f3 = fig3();
  JointStrategy s = profile(f3.game, {"b", "b", "b", "a"});
  const NodeId pair[] = {0, 1};
  const ColorId to[] = {f3.game.palette().id("a"), f3.game.palette().id("a")};
  DeviationReport two = describe_deviation(f3.game, s, pair, to);
  EXPECT_EQ(format_witness(f3, two), "{1,2}->a");
}

TEST(ReportWriter, CsvHeaderAndQuoting) {
  std::ostringstream out;
  ReportWriter w(out, ReportFormat::csv);
  w.write({"fig1", 8, 3, 5, "k-equilibrium", "false", "{1,4,5,6,7}->c", 1.5});
  w.write({"fig3", 4, 2, std::nullopt, "transition", "4", "(a,a,a,a)", 0});
  const std::string s = out.str();
  EXPECT_EQ(s.substr(0, s.find('\n')), "instance,n,m_colors,k,property,value,witness,runtime_ms");
  EXPECT_NE(s.find("fig1,8,3,5,k-equilibrium,false,\"{1,4,5,6,7}->c\","), std::string::npos);
  EXPECT_NE(s.find("fig3,4,2,,transition,4,\"(a,a,a,a)\","), std::string::npos);
}

TEST(ReportWriter, JsonLines) {
  std::ostringstream out;
  ReportWriter w(out, ReportFormat::json_lines);
  w.write({"fig1", 8, 3, 5, "k-equilibrium", "false", "{1}->c", 2});
  EXPECT_EQ(out.str().rfind("{\"instance\":\"fig1\",\"n\":8,\"m_colors\":3,\"k\":5,", 0), 0u);
  EXPECT_EQ(parse_report_format("json-lines"), ReportFormat::json_lines);
  EXPECT_THROW(parse_report_format("xml"), InvalidArgument);
}

TEST(LoadInstance, BuiltinBeforeFile) {
  EXPECT_EQ(load_instance("octahedron").game.node_count(), 10);
  EXPECT_THROW(load_instance("/nonexistent/path.cg"), Error);
}
