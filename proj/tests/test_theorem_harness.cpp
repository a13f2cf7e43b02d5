#include "doctest.h"

#include "prismhull/theorem_harness.hpp"

#include <map>

using namespace prismhull;

namespace {

FamilySpec spec(const char* text) { return parse_family(text); }

std::vector<TheoremCheck> only(std::vector<TheoremCheck> checks, const std::string& id)
{
  std::erase_if(checks, [&](const auto& c) { return c.theorem_id != id; });
  return checks;
}

}  // namespace

TEST_CASE("expectations")
{
  CHECK(Expectation::equal(5).holds(5));
  CHECK_FALSE(Expectation::equal(5).holds(4));
  CHECK(Expectation::at_most(4).holds(4));
  CHECK_FALSE(Expectation::at_most(4).holds(5));
  CHECK(Expectation::at_least(3).holds(7));
  CHECK(Expectation::between(3, 5).holds(3));
  CHECK_FALSE(Expectation::between(3, 5).holds(6));

  CHECK(Expectation::at_most(4).slack(2) == 2);
  CHECK(Expectation::at_least(3).slack(7) == 4);
  CHECK(Expectation::between(3, 5).slack(4) == 1);
  CHECK(Expectation::at_most(4).slack(6) == -2);
  CHECK_FALSE(Expectation::equal(1).slack(1).has_value());

  CHECK(Expectation::equal(5).to_string() == "eq:5");
  CHECK(Expectation::at_most(4).to_string() == "le:4");
  CHECK(Expectation::at_least(3).to_string() == "ge:3");
  CHECK(Expectation::between(3, 5).to_string() == "in:3..5");
}

TEST_CASE("report line format")
{
  TheoremCheck c;
  c.theorem_id = "T5";
  c.instance = "prism(union(path:4,path:1))";
  c.expected = Expectation::at_least(3);
  c.observed_value = 3;
  c.verdict = Verdict::pass;
  c.slack = 0;
  CHECK(c.to_line() == "T5 prism(union(path:4,path:1)) expected=ge:3 observed=3 verdict=pass slack=0");
  c.note = "t=1";
  c.slack.reset();
  c.verdict = Verdict::not_applicable;
  CHECK(c.to_line()
        == "T5 prism(union(path:4,path:1)) expected=ge:3 observed=3 verdict=n/a slack=- note=t=1");
}

TEST_CASE("complete, path and cycle prisms")
{
  const auto checks = check_duarte(IntRange{3, 5}, SearchConfig{});
  std::map<std::string, long> seen;
  for (const auto& c : checks) {
    CHECK(c.verdict == Verdict::pass);
    seen[c.instance] = *c.observed_value;
  }
  CHECK(seen.at("prism(complete:5)") == 5);
  CHECK(seen.at("prism(path:3)") == 3);
  CHECK(seen.at("prism(cycle:5)") == 3);
  CHECK(checks.size() == 9);

  // Ranges are clipped to each family's domain.
  CHECK(check_duarte(IntRange{1, 2}, SearchConfig{}).size() == 1 + 2);
}

TEST_CASE("tree checks")
{
  const std::vector<FamilySpec> specs{spec("star:4"), spec("edges:6:0-1;1-2;2-3;1-4;2-5"),
                                      spec("tree:7:seed=1"), spec("path:4"), spec("cycle:5")};
  const auto checks = check_trees(specs, SearchConfig{});
  REQUIRE(checks.size() == 5);
  CHECK(checks[0].expected.to_string() == "eq:5");
  CHECK(checks[0].verdict == Verdict::pass);
  CHECK(checks[1].expected.to_string() == "eq:2");
  CHECK(checks[1].verdict == Verdict::pass);
  CHECK(checks[2].verdict == Verdict::pass);
  CHECK(*checks[2].observed_value == 2);
  CHECK(checks[3].verdict == Verdict::not_applicable);
  CHECK(*checks[3].observed_value == 2);
  CHECK(checks[4].verdict == Verdict::invalid);
  CHECK_FALSE(checks[4].observed_value.has_value());
}

TEST_CASE("disconnected checks")
{
  const SearchConfig cfg;
  const std::vector<FamilySpec> t4{spec("union(complete:2,complete:2,path:1)")};
  const auto four = check_disconnected(t4, cfg);
  REQUIRE(four.size() == 1);
  CHECK(four[0].theorem_id == "T4");
  CHECK(four[0].expected.to_string() == "eq:4");
  CHECK(four[0].verdict == Verdict::pass);

  const std::vector<FamilySpec> c1{spec("union(path:5,path:1)")};
  const auto cor = only(check_disconnected(c1, cfg), "C1");
  REQUIRE(cor.size() == 1);
  CHECK(cor[0].expected.to_string() == "eq:3");
  CHECK(cor[0].verdict == Verdict::pass);

  const std::vector<FamilySpec> p4{spec("union(path:4,path:1,path:1)")};
  const auto bounds = check_disconnected(p4, cfg);
  const auto t5 = only(bounds, "T5");
  const auto t6 = only(bounds, "T6a");
  REQUIRE(t5.size() == 1);
  REQUIRE(t6.size() == 1);
  CHECK(t5[0].expected.to_string() == "ge:4");
  CHECK(t6[0].expected.to_string() == "le:4");
  CHECK(*t5[0].observed_value == 4);
  CHECK(t5[0].slack == 0);
  CHECK(only(bounds, "C1").empty());

  const std::vector<FamilySpec> none{spec("path:4"), spec("union(path:1,path:1)")};
  for (const auto& c : check_disconnected(none, cfg))
    CHECK(c.verdict == Verdict::not_applicable);
}

TEST_CASE("classification comes from the graph, not the label")
{
  // An explicit edge list for union(K2,K2,K1).
  const std::vector<FamilySpec> specs{spec("edges:5:0-1;2-3")};
  const auto checks = check_disconnected(specs, SearchConfig{});
  REQUIRE(checks.size() == 1);
  CHECK(checks[0].theorem_id == "T4");
  CHECK(checks[0].expected.to_string() == "eq:4");

  const std::vector<FamilySpec> cographs{spec("complement(union(complete:2,complete:2,path:1))")};
  const auto t8 = check_cographs(cographs, SearchConfig{});
  REQUIRE(t8.size() == 1);
  CHECK(t8[0].theorem_id == "T8iii");
  CHECK(t8[0].note == "k=2,t=1");
}

TEST_CASE("cograph checks")
{
  const SearchConfig cfg;
  const std::vector<FamilySpec> specs{spec("complete:4"), spec("star:3"), spec("path:4"),
                                      spec("union(complete:2,complete:2)"), spec("complete:1")};
  const auto checks = check_cographs(specs, cfg);
  REQUIRE(checks.size() == 5);
  CHECK(checks[0].theorem_id == "T8i");
  CHECK(checks[0].expected.to_string() == "eq:4");
  CHECK(checks[0].verdict == Verdict::pass);
  CHECK(checks[1].theorem_id == "T8ii");
  CHECK(checks[1].expected.to_string() == "in:3..4");
  CHECK(*checks[1].observed_value == 4);
  CHECK(checks[1].verdict == Verdict::pass);
  CHECK(checks[2].verdict == Verdict::invalid);
  CHECK(checks[3].verdict == Verdict::invalid);
  CHECK(checks[4].verdict == Verdict::not_applicable);
}

TEST_CASE("unbounded family")
{
  const auto checks = check_unbounded(IntRange{2, 5}, SearchConfig{});
  REQUIRE(checks.size() == 4);
  CHECK(checks[0].instance == "prism(path:4)");
  for (const auto& c : checks) {
    CHECK(c.verdict == Verdict::pass);
    CHECK(c.note == "g_and_complement_connected");
  }
  CHECK(*checks[3].observed_value == 5);
}

TEST_CASE("lemma checks")
{
  const std::vector<FamilySpec> corpus{spec("path:4"), spec("cycle:5"), spec("complete:3")};
  const auto checks = check_lemmas(corpus, SearchConfig{});
  CHECK(checks.size() == 6);
  for (const auto& c : checks) {
    CHECK(c.verdict == Verdict::pass);
    CHECK(*c.observed_value == 0);
  }
  CHECK(checks[0].note == "min_sets=1,h=2");
  CHECK(checks[5].note.find("pairs=3") != std::string::npos);
}

TEST_CASE("default instance lists")
{
  CHECK(lemma_corpus().size() == 200);
  for (const auto& s : lemma_corpus())
    CHECK(generate(s).order() <= 8);
  CHECK(default_tree_specs().size() == 16);
  CHECK(default_disconnected_specs() == default_disconnected_specs());
}

TEST_CASE("theorem filters")
{
  CHECK(theorem_matches("T9", ""));
  CHECK(theorem_matches("T9", "T9"));
  CHECK(theorem_matches("T2.1", "T2"));
  CHECK(theorem_matches("T8ii", "T8"));
  CHECK(theorem_matches("T6a", "T6"));
  CHECK_FALSE(theorem_matches("T2.1", "T2.2"));
  CHECK_FALSE(theorem_matches("T8i", "T8ii"));
  CHECK_FALSE(theorem_matches("C1", "C"));
}

TEST_CASE("full suite covers every theorem and is reproducible")
{
  SuiteOptions options;
  const auto checks = run_suite(options);
  std::map<std::string, int> graded;
  for (const auto& c : checks) {
    CHECK_MESSAGE(c.verdict != Verdict::fail, c.to_line());
    if (c.verdict == Verdict::pass)
      ++graded[c.theorem_id];
    if (c.expected.kind != Expectation::Kind::equal && c.slack)
      CHECK(*c.slack >= 0);
  }
  for (const auto& id : theorem_ids())
    CHECK_MESSAGE(graded[id] >= 3, id);

  options.workers = 4;
  const auto parallel = run_suite(options);
  CHECK(format_report(parallel) == format_report(checks));

  SuiteOptions t9;
  t9.theorem = "T9";
  t9.range = IntRange{2, 6};
  CHECK(run_suite(t9).size() == 5);
}
