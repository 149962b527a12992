#include "hpdf/catalog.hpp"
#include "hpdf/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>

using namespace hpdf;
using testing::code_of;
namespace io = hpdf::io;

TEST_CASE("group descriptors round-trip")
{
  const std::vector<FiniteGroup> groups{
      FiniteGroup::cyclic(9), FiniteGroup::semidirect32(),
      FiniteGroup::product({FiniteGroup::cyclic(4), FiniteGroup::semidirect32()}),
      FiniteGroup::table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}})};
  for (const auto &g : groups) {
    CAPTURE(g.name());
    CHECK(io::group_from_json(io::group_to_json(g)) == g);
    for (std::uint32_t a = 0; a < g.order(); ++a)
      REQUIRE(io::element_from_json(g, io::element_to_json(g, Element{a})) == Element{a});
  }
  const auto sd = FiniteGroup::semidirect32();
  CHECK(io::element_to_json(sd, sd.op(Element{8}, Element{8})) == io::json::parse("[2,0]"));
}

TEST_CASE("ring descriptors round-trip")
{
  for (const auto &r : {Ring::zmod(25), Ring::gf(3, 2), Ring::gf(47, 1),
                        Ring::product({Ring::gf(5, 1), Ring::gf(7, 1)})}) {
    CAPTURE(r.name());
    const auto back = io::ring_from_json(io::ring_to_json(r));
    CHECK(back.order() == r.order());
    CHECK(io::ring_to_json(back) == io::ring_to_json(r));
    for (std::uint32_t a = 0; a < r.order(); a += 3)
      CHECK(io::ring_element_from_json(r, io::ring_element_to_json(r, RingElement{a})) ==
            RingElement{a});
  }
  // "k" defaults to 1 and the modulus to the canonical one
  const auto f9 = io::ring_from_json(io::json::parse(R"({"type":"gf","p":3,"k":2})"));
  CHECK(std::get<GfDesc>(f9.descriptor()).modulus == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(io::ring_from_json(io::json::parse(R"({"type":"gf","p":5})")).order() == 5);
}

TEST_CASE("families round-trip")
{
  SUBCASE("catalog entries")
  {
    for (const auto &entry : catalog_entries()) {
      CAPTURE(entry.name);
      const auto j = io::family_to_json(entry.family);
      const auto back = io::family_from_json(j);
      CHECK(back.group() == entry.family.group());
      CHECK(back.blocks() == entry.family.blocks());
      CHECK(io::family_to_json(back).dump() == j.dump());
      CHECK_FALSE(j.contains("multiplicities"));
      CHECK(j.at("forbidden").is_null());
    }
  }
  SUBCASE("multisets and forbidden subgroups")
  {
    auto z4 = FiniteGroup::cyclic(4);
    DesignFamily f(z4, {Multiset{Element{1}, Element{1}, Element{3}}},
                   std::vector<Element>{Element{0}, Element{2}});
    const auto j = io::family_to_json(f, io::Declared{FamilyKind::DF, "(4,2,[3],1)"});
    CHECK(j.contains("multiplicities"));
    const auto back = io::family_from_json(j);
    CHECK(back.blocks() == f.blocks());
    CHECK(back.forbidden() == f.forbidden());
    const auto decl = io::declared_from_json(j);
    REQUIRE(decl.has_value());
    CHECK(decl->kind == FamilyKind::DF);
    CHECK(decl->parameters == "(4,2,[3],1)");
  }
}

TEST_CASE("order-32 catalog entry serializes as the listed blocks")
{
  const auto j = io::family_to_json(sporadic32_family());
  const auto &b = j.at("blocks");
  REQUIRE(b.size() == 4);
  CHECK(b[0] == io::json::parse("[[0,0],[2,0]]"));
  CHECK(b[1] == io::json::parse("[[1,0],[3,4]]"));
  CHECK(b[2] == io::json::parse("[[0,1],[0,3],[1,2],[1,5],[1,6],[3,3]]"));
  CHECK(b[3].size() == 22);
}

TEST_CASE("reports")
{
  const auto fam = trivial_hds_family();
  const auto r = verify(fam);
  const auto j = io::report_to_json(fam.group(), r);
  CHECK(j.at("kind") == "PDF");
  CHECK(j.at("v") == 4);
  CHECK(j.at("lambda_or_mu") == 2);
  CHECK(j.at("parameters") == "(4,[1,3],2)");
  CHECK(j.at("partition_target") == "G");
  CHECK(j.at("convention") == "right");
  CHECK(j.at("witness").is_null());
}

TEST_CASE("recipes round-trip and replay")
{
  auto recipe = make_recipe(trivial_hds_family(), Ring::gf(7, 1), Completion::PerBlock);
  const auto j = io::recipe_to_json(recipe);
  const auto back = io::recipe_from_json(j);
  CHECK(back.y == recipe.y);
  CHECK(back.f_map == recipe.f_map);
  CHECK(back.starters == recipe.starters);
  CHECK(back.completion == Completion::PerBlock);
  CHECK(io::recipe_to_json(back).dump() == j.dump());
  CHECK(hadamard_expansion(back).family.blocks() == hadamard_expansion(recipe).family.blocks());
}

TEST_CASE("files and parse errors")
{
  const auto path = std::filesystem::temp_directory_path() / "hpdf_io_test.json";
  const auto j = io::family_to_json(sporadic32_family());
  io::write_json_file(path.string(), j);
  CHECK(io::read_json_file(path.string()) == j);
  std::filesystem::remove(path);

  CHECK(code_of([] { io::read_json_file("/nonexistent/hpdf.json"); }) == Errc::ParseError);
  CHECK(code_of([] { io::group_from_json(io::json::parse(R"({"type":"klein"})")); }) ==
        Errc::ParseError);
  CHECK(code_of([] { io::family_from_json(io::json::parse(R"({"blocks":[]})")); }) ==
        Errc::ParseError);
  CHECK(code_of([] {
          io::family_from_json(io::json::parse(R"({"group":{"type":"cyclic","n":4},"blocks":[[[7]]]})"));
        }) == Errc::ElementOutOfRange);
}
