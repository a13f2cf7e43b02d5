#include "prismhull/cli.hpp"

#include "prismhull/edge_list.hpp"
#include "prismhull/errors.hpp"
#include "prismhull/family.hpp"
#include "prismhull/hull_solver.hpp"
#include "prismhull/theorem_harness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace prismhull {

namespace {

struct Options
{
  std::string input;
  std::string gen;
  std::string set;
  std::optional<std::uint64_t> seed;
  int max_vertices = 24;
  int workers = 1;
  std::string out_path;
  std::string theorem;
  std::string range;
};

void reseed(FamilySpec& spec, std::uint64_t seed)
{
  if (spec.kind == FamilyKind::tree || spec.kind == FamilyKind::cograph
      || spec.kind == FamilyKind::gnp)
    spec.seed = seed;
  for (auto& part : spec.parts)
    reseed(part, seed);
}

struct Loaded
{
  Graph graph;
  std::optional<FamilySpec> spec;
};

Loaded load(const Options& o)
{
  if (o.gen.empty() == o.input.empty())
    throw ParseError("exactly one input is required: a file path or --gen DSL");
  if (!o.gen.empty()) {
    auto spec = parse_family(o.gen);
    if (o.seed)
      reseed(spec, *o.seed);
    auto g = generate(spec);
    return {std::move(g), std::move(spec)};
  }
  std::ifstream in(o.input);
  if (!in)
    throw ParseError("cannot open input file '" + o.input + "'");
  return {read_edge_list(in), std::nullopt};
}

VertexSet parse_set(const std::string& text, int n)
{
  VertexSet s(n);
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty())
      continue;
    long value = 0;
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
      throw ParseError("invalid vertex '" + token + "' in --set");
    if (value < 0 || value >= n)
      throw RangeError("vertex '" + token + "' outside [0," + std::to_string(n) + ")");
    s.insert(static_cast<Vertex>(value));
  }
  return s;
}

IntRange parse_range(const std::string& text)
{
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw ParseError("invalid range '" + text + "', expected a..b");
  auto number = [&](std::string_view part) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw ParseError("invalid range bound '" + std::string(part) + "'");
    return value;
  };
  const std::string_view view(text);
  IntRange r{number(view.substr(0, dots)), number(view.substr(dots + 2))};
  if (r.lo > r.hi)
    throw std::invalid_argument("range '" + text + "' is empty");
  return r;
}

SearchConfig search_config(const Options& o)
{
  SearchConfig cfg;
  cfg.max_vertices = o.max_vertices;
  cfg.parallel_width = o.workers;
  cfg.validate();
  return cfg;
}

int dispatch(const std::string& verb, const Options& o, std::ostream& out)
{
  if (verb == "verify") {
    SuiteOptions suite;
    suite.theorem = o.theorem;
    if (!o.range.empty())
      suite.range = parse_range(o.range);
    suite.search = search_config(o);
    suite.workers = o.workers;
    const auto checks = run_suite(suite);
    out << format_report(checks);
    const auto failed = std::count_if(checks.begin(), checks.end(),
                                      [](const auto& c) { return c.verdict == Verdict::fail; });
    out << "# checks=" << checks.size() << " failed=" << failed << '\n';
    return failed == 0 ? exit_ok : exit_verify_failed;
  }

  const auto [g, spec] = load(o);
  if (verb == "gen") {
    write_edge_list(out, g);
  } else if (verb == "prism") {
    write_edge_list(out, complementary_prism(g));
  } else if (verb == "interval") {
    const auto s = parse_set(o.set, g.order());
    const DistanceMatrix dm(g);
    out << "I[" << s.to_string() << "] = " << interval_set(g, dm, s).to_string() << '\n';
  } else if (verb == "hull") {
    const auto s = parse_set(o.set, g.order());
    const auto trace = convex_hull(g, DistanceMatrix(g), s);
    for (std::size_t p = 0; p < trace.steps.size(); ++p)
      out << "I^" << p << " = " << trace.steps[p].to_string() << '\n';
    out << "hull = " << trace.final_set().to_string() << '\n';
  } else if (verb == "hullnum") {
    const auto cfg = search_config(o);
    // Prism inputs get the pair constraints of their base.
    const auto report = spec && spec->kind == FamilyKind::prism
                            ? hull_number_prism(generate(spec->parts.front()), cfg)
                            : hull_number(g, cfg);
    out << "h = " << report.hull_number << '\n'
        << "witness = " << report.witness.to_string() << '\n'
        << "forced = " << report.forced.to_string() << '\n'
        << "sets_tested = " << report.sets_tested << '\n';
  }
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Geodetic intervals, hulls and hull numbers of graphs and complementary prisms",
               "prismhull"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Edge-list file");
    sub->add_option("--gen", o.gen, "Family DSL string, e.g. prism(path:4)");
    sub->add_option("--seed", o.seed, "Seed for every seeded family in --gen");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--max-vertices", o.max_vertices, "Largest graph searched exactly")
        ->capture_default_str();
    sub->add_option("--workers", o.workers, "Search threads")->capture_default_str();
  };

  for (const char* verb : {"interval", "hull"}) {
    auto* sub = app.add_subcommand(verb, std::string(verb) == "interval" ? "Print I[S]"
                                                                          : "Print the hull sequence of S");
    add_input(sub);
    sub->add_option("--set", o.set, "Comma-separated vertices")->required();
    sub->add_option("--out", o.out_path, "Write output to this file");
  }
  {
    auto* sub = app.add_subcommand("hullnum", "Hull number, witness and search statistics");
    add_input(sub);
    add_search(sub);
    sub->add_option("--out", o.out_path, "Write output to this file");
  }
  for (const char* verb : {"prism", "gen"}) {
    auto* sub = app.add_subcommand(verb, std::string(verb) == "prism"
                                             ? "Write the complementary prism as an edge list"
                                             : "Write the graph as an edge list");
    add_input(sub);
    sub->add_option("--out", o.out_path, "Write output to this file");
  }
  {
    auto* sub = app.add_subcommand("verify", "Run the theorem checks");
    sub->add_option("--theorem", o.theorem, "Theorem id or prefix, e.g. T9 or T2");
    sub->add_option("--range", o.range, "Parameter range a..b for T2.x and T9");
    add_search(sub);
    sub->add_option("--out", o.out_path, "Write output to this file");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_parse;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    if (o.out_path.empty())
      return dispatch(verb, o, out);
    std::ostringstream buffer;
    const int status = dispatch(verb, o, buffer);
    std::ofstream file(o.out_path);
    if (!file)
      throw std::runtime_error("cannot write '" + o.out_path + "'");
    file << buffer.str();
    return status;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const CapError& e) {
    err << "cap error: " << e.what() << '\n';
    return exit_cap;
  } catch (const std::out_of_range& e) {
    err << "range error: " << e.what() << '\n';
    return exit_range;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return exit_parse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_internal;
  }
}

}  // namespace prismhull
