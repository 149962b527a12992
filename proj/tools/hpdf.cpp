// hpdf: construct, verify and search partitioned difference families.
//
// Exit status: 0 certified / success, 1 bad input, 2 certification failure.

#include "hpdf/catalog.hpp"
#include "hpdf/constructions.hpp"
#include "hpdf/error.hpp"
#include "hpdf/io.hpp"
#include "hpdf/search.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

using namespace hpdf;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kNotCertified = 2;

struct Options {
  std::string kind;
  std::string group;
  std::string set;
  std::string ring;
  std::string in;
  std::string recipe;
  std::string catalog;
  std::string out;
  std::string completion = "single";
  std::string convention = "right";
  std::string format = "json";
  unsigned u = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  std::size_t max_results = 0;
  long time_ms = 0;
  std::string catalog_action;
  std::string catalog_name;
};

DiffConvention parse_convention(const std::string &s)
{
  return s == "left" ? DiffConvention::LeftInverse : DiffConvention::RightInverse;
}

FiniteGroup default_group(const Options &o)
{
  if (!o.group.empty())
    return io::group_from_json(json::parse(o.group));
  if (o.u == 1)
    return FiniteGroup::cyclic(4);
  if (o.u == 2)
    return FiniteGroup::product({FiniteGroup::cyclic(4), FiniteGroup::cyclic(4)});
  throw Error(Errc::ParseError, "--group is required for this --u");
}

Ring ring_option(const Options &o)
{
  if (!o.ring.empty())
    return io::ring_from_json(json::parse(o.ring));
  if (o.m)
    return Ring::fields_of_order(o.m);
  throw Error(Errc::ParseError, "--ring or --m is required");
}

// The Hadamard PDF to expand: --in FILE, --catalog NAME, or {D, G \ D} for the
// first difference set found with --u in --group.
DesignFamily source_pdf(const Options &o)
{
  if (!o.in.empty())
    return io::family_from_json(io::read_json_file(o.in));
  if (!o.catalog.empty())
    return catalog_entry(o.catalog).family;
  if (o.u) {
    const auto g = default_group(o);
    SearchBounds first;
    first.max_results = 1;
    auto found = search_hds(g, o.u, first);
    if (found.sets.empty())
      throw Error(Errc::NoHdsAvailable, "no Hadamard difference set in " + g.name());
    return complement_pdf(g, found.sets.front()).family;
  }
  throw Error(Errc::ParseError, "one of --in, --catalog or --u is required");
}

void emit(const Options &o, const json &doc)
{
  if (o.out.empty())
    std::cout << doc.dump(2) << '\n';
  else
    io::write_json_file(o.out, doc);
}

int finish_construction(const Options &o, const Construction &c)
{
  const auto report = io::report_to_json(c.family.group(), c.report);
  if (o.out.empty()) {
    std::cout << json{{"family", io::construction_to_json(c)}, {"report", report}}.dump(2)
              << '\n';
  } else {
    io::write_json_file(o.out, io::construction_to_json(c));
    io::write_json_file(o.out + ".report.json", report);
    if (o.format == "text")
      std::cout << c.report.summary() << '\n';
    else
      std::cout << report.dump(2) << '\n';
  }
  if (!c.certified()) {
    std::cerr << "certification failed: expected " << kind_name(c.expected_kind) << ' '
              << c.expected_parameters << ", got " << c.report.summary() << '\n';
    return kNotCertified;
  }
  return kOk;
}

Completion parse_completion(const std::string &s)
{
  return s == "per-block" ? Completion::PerBlock : Completion::SingleBlock;
}

int cmd_construct(const Options &o)
{
  const auto conv = parse_convention(o.convention);
  if (o.kind == "complement") {
    const auto g = default_group(o);
    if (o.set.empty()) {
      SearchBounds first;
      first.max_results = 1;
      auto found = search_hds(g, o.u, first, conv);
      if (found.sets.empty())
        throw Error(Errc::NoHdsAvailable, "no Hadamard difference set in " + g.name());
      return finish_construction(o, complement_pdf(g, found.sets.front(), conv));
    }
    std::vector<Element> d;
    for (const auto &e : json::parse(o.set))
      d.push_back(io::element_from_json(g, e));
    return finish_construction(o, complement_pdf(g, Multiset(std::move(d)), conv));
  }
  if (o.kind == "double-sdf")
    return finish_construction(o, double_sdf(source_pdf(o), conv));
  if (o.kind == "paley")
    return finish_construction(o, paley_double_sdf(o.q));
  if (o.kind == "expand") {
    ExpansionRecipe recipe =
        !o.recipe.empty()
            ? io::recipe_from_json(io::read_json_file(o.recipe))
            : make_recipe(source_pdf(o), ring_option(o), parse_completion(o.completion), conv);
    if (o.completion == "none")
      return finish_construction(o, relative_expansion(recipe));
    if (o.recipe.empty() || o.completion != "single")
      recipe.completion = parse_completion(o.completion);
    return finish_construction(o, hadamard_expansion(recipe));
  }
  if (o.kind == "corollary-hds") {
    const auto g = default_group(o);
    auto pair = corollary_hds_expansion(o.u, g, o.m);
    return finish_construction(o, o.completion == "per-block" ? pair.per_block
                                                              : pair.single_block);
  }
  if (o.kind == "corollary-sporadic") {
    auto pair = corollary_sporadic_expansion(o.m);
    return finish_construction(o, o.completion == "per-block" ? pair.per_block
                                                              : pair.single_block);
  }
  throw Error(Errc::ParseError, "unknown construction " + o.kind);
}

int cmd_verify(const Options &o)
{
  const auto doc = io::read_json_file(o.in);
  const auto family = io::family_from_json(doc);
  const auto declared = io::declared_from_json(doc);
  const auto report = verify(family, parse_convention(o.convention));
  const auto out = io::report_to_json(family.group(), report);
  if (o.format == "text")
    std::cout << report.summary() << '\n';
  else
    std::cout << out.dump(2) << '\n';
  if (!o.out.empty())
    io::write_json_file(o.out, out);

  if (!report.ok())
    return kNotCertified;
  if (declared && (report.kind != declared->kind ||
                   (!declared->parameters.empty() && report.parameters() != declared->parameters))) {
    std::cerr << "declared " << kind_name(declared->kind) << ' ' << declared->parameters
              << ", verified " << report.summary() << '\n';
    return kNotCertified;
  }
  return kOk;
}

int cmd_search_hds(const Options &o)
{
  const auto g = default_group(o);
  SearchBounds bounds;
  if (o.max_results)
    bounds.max_results = o.max_results;
  bounds.time_budget = std::chrono::milliseconds(o.time_ms);
  const auto conv = parse_convention(o.convention);
  const auto found = search_hds(g, o.u, bounds, conv);
  json sets = json::array();
  bool all_ok = true;
  for (std::size_t i = 0; i < found.sets.size(); ++i) {
    json elems = json::array();
    for (auto e : found.sets[i].elements())
      elems.push_back(io::element_to_json(g, e));
    sets.push_back({{"set", elems}, {"report", io::report_to_json(g, found.reports[i])}});
    all_ok = all_ok && found.reports[i].kind == FamilyKind::DS;
  }
  emit(o, {{"group", io::group_to_json(g)},
           {"u", o.u},
           {"complete", found.complete},
           {"count", found.sets.size()},
           {"results", sets}});
  return all_ok ? kOk : kNotCertified;
}

int cmd_search_y(const Options &o)
{
  const auto r = ring_option(o);
  SearchBounds bounds;
  bounds.time_budget = std::chrono::milliseconds(o.time_ms);
  const auto res = max_unit_y_search(r, bounds);
  json y = json::array();
  for (auto e : res.witness)
    y.push_back(io::ring_element_to_json(r, e));
  const bool ok = check_y_condition(r, res.witness).ok || res.witness.empty();
  emit(o, {{"ring", io::ring_to_json(r)},
           {"max_size", res.max_size},
           {"witness", y},
           {"witness_valid", ok},
           {"complete", res.complete},
           {"nodes", res.nodes}});
  return ok ? kOk : kNotCertified;
}

int cmd_catalog(const Options &o)
{
  if (o.catalog_action == "list") {
    for (const auto &c : certify_catalog()) {
      std::cout << c.name << ' ' << c.right.summary() << " certifying:";
      for (auto conv : c.certifying)
        std::cout << ' ' << convention_name(conv);
      std::cout << '\n';
    }
    return kOk;
  }
  if (o.catalog_action == "emit") {
    if (o.catalog_name.empty())
      throw Error(Errc::ParseError, "catalog emit needs an entry name");
    const auto entry = catalog_entry(o.catalog_name);
    const auto report = verify(entry.family, parse_convention(o.convention));
    auto doc = io::family_to_json(entry.family, io::Declared{report.kind, report.parameters()});
    json conventions = json::array();
    for (auto conv : {DiffConvention::RightInverse, DiffConvention::LeftInverse})
      if (verify(entry.family, conv).kind == FamilyKind::PDF)
        conventions.push_back(convention_name(conv));
    doc["catalog"] = {{"name", entry.name},
                      {"description", entry.description},
                      {"certifying_conventions", conventions}};
    emit(o, doc);
    return report.ok() ? kOk : kNotCertified;
  }
  throw Error(Errc::ParseError, "catalog action must be list or emit");
}

int cmd_recipe(const Options &o)
{
  const auto recipe = make_recipe(source_pdf(o), ring_option(o), parse_completion(o.completion),
                                  parse_convention(o.convention));
  emit(o, io::recipe_to_json(recipe));
  return kOk;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Hadamard partitioned difference families: construct, verify, search"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--convention", o.convention, "difference convention")
        ->check(CLI::IsMember({"right", "left"}));
    cmd->add_option("--out", o.out, "output path");
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto construct = app.add_subcommand("construct", "build and certify a family");
  construct->add_option("kind", o.kind, "construction")
      ->required()
      ->check(CLI::IsMember({"complement", "double-sdf", "paley", "expand", "corollary-hds",
                             "corollary-sporadic"}));
  construct->add_option("--group", o.group, "group descriptor JSON");
  construct->add_option("--set", o.set, "difference set as JSON element list");
  construct->add_option("--ring", o.ring, "ring descriptor JSON");
  construct->add_option("--u", o.u, "Hadamard parameter u");
  construct->add_option("--m", o.m, "odd ring order 2n+1");
  construct->add_option("--q", o.q, "prime for the paley construction");
  construct->add_option("--in", o.in, "input family file");
  construct->add_option("--recipe", o.recipe, "replay a recipe file");
  construct->add_option("--catalog", o.catalog, "catalog entry as input");
  construct->add_option("--completion", o.completion, "completion blocks")
      ->check(CLI::IsMember({"single", "per-block", "none"}));
  add_common(construct);

  auto verify_cmd = app.add_subcommand("verify", "verify a family file");
  verify_cmd->add_option("file", o.in, "family JSON")->required();
  add_common(verify_cmd);

  auto search_hds_cmd = app.add_subcommand("search-hds", "search Hadamard difference sets");
  search_hds_cmd->add_option("--group", o.group, "group descriptor JSON");
  search_hds_cmd->add_option("--u", o.u, "Hadamard parameter u")->required();
  search_hds_cmd->add_option("--max", o.max_results, "maximum number of results");
  search_hds_cmd->add_option("--time-ms", o.time_ms, "time budget in milliseconds");
  add_common(search_hds_cmd);

  auto search_y_cmd = app.add_subcommand("search-y", "largest unit set Y in a ring");
  search_y_cmd->add_option("--ring", o.ring, "ring descriptor JSON");
  search_y_cmd->add_option("--m", o.m, "use the product of fields of this order");
  search_y_cmd->add_option("--time-ms", o.time_ms, "time budget in milliseconds");
  add_common(search_y_cmd);

  auto catalog_cmd = app.add_subcommand("catalog", "list or emit built-in families");
  catalog_cmd->add_option("action", o.catalog_action, "list or emit")
      ->required()
      ->check(CLI::IsMember({"list", "emit"}));
  catalog_cmd->add_option("name", o.catalog_name, "entry to emit");
  add_common(catalog_cmd);

  auto recipe_cmd = app.add_subcommand("recipe", "write a replayable expansion recipe");
  recipe_cmd->add_option("--group", o.group, "group descriptor JSON");
  recipe_cmd->add_option("--ring", o.ring, "ring descriptor JSON");
  recipe_cmd->add_option("--u", o.u, "Hadamard parameter u");
  recipe_cmd->add_option("--m", o.m, "odd ring order 2n+1");
  recipe_cmd->add_option("--in", o.in, "input family file");
  recipe_cmd->add_option("--catalog", o.catalog, "catalog entry as input");
  recipe_cmd->add_option("--completion", o.completion, "completion blocks")
      ->check(CLI::IsMember({"single", "per-block"}));
  add_common(recipe_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*construct)
      return cmd_construct(o);
    if (*verify_cmd)
      return cmd_verify(o);
    if (*search_hds_cmd)
      return cmd_search_hds(o);
    if (*search_y_cmd)
      return cmd_search_y(o);
    if (*catalog_cmd)
      return cmd_catalog(o);
    if (*recipe_cmd)
      return cmd_recipe(o);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::ConditionFails ? kNotCertified : kBadInput;
  } catch (const json::exception &e) {
    std::cerr << "error: bad JSON argument: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::out_of_range &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
