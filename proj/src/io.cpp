#include "hpdf/io.hpp"

#include "hpdf/error.hpp"

#include <fstream>

namespace hpdf::io {

namespace {

template <class F> auto parsing(const char *what, F &&f) -> decltype(f())
{
  try {
    return f();
  } catch (const json::exception &e) {
    throw Error(Errc::ParseError, std::string(what) + ": " + e.what());
  }
}

std::string text(const json &j, const char *key)
{
  if (!j.is_object() || !j.contains(key))
    throw Error(Errc::ParseError, std::string("missing key \"") + key + "\"");
  return j.at(key).get<std::string>();
}

std::vector<std::uint32_t> coord_list(const json &j)
{
  if (!j.is_array())
    throw Error(Errc::ParseError, "element must be a coordinate array");
  return j.get<std::vector<std::uint32_t>>();
}

const char *target_name(PartitionTarget t)
{
  switch (t) {
  case PartitionTarget::Group: return "G";
  case PartitionTarget::GroupMinusH: return "G\\H";
  case PartitionTarget::None: break;
  }
  return nullptr;
}

} // namespace

json group_to_json(const FiniteGroup &g)
{
  return std::visit(
      [](const auto &d) -> json {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, CyclicDesc>)
          return {{"type", "cyclic"}, {"n", d.n}};
        else if constexpr (std::is_same_v<T, Semidirect32Desc>)
          return {{"type", "semidirect32"}};
        else if constexpr (std::is_same_v<T, TableDesc>)
          return {{"type", "table"}, {"n", d.n}, {"table", d.table}};
        else {
          json factors = json::array();
          for (const auto &f : d.factors)
            factors.push_back(group_to_json(f));
          return {{"type", "product"}, {"factors", factors}};
        }
      },
      g.descriptor());
}

FiniteGroup group_from_json(const json &j)
{
  return parsing("group descriptor", [&] {
    const auto type = text(j, "type");
    if (type == "cyclic")
      return FiniteGroup::cyclic(j.at("n").get<std::uint32_t>());
    if (type == "semidirect32")
      return FiniteGroup::semidirect32();
    if (type == "table") {
      auto rows = j.at("table").get<std::vector<std::vector<std::uint32_t>>>();
      if (j.contains("n") && j.at("n").get<std::size_t>() != rows.size())
        throw Error(Errc::ParseError, "table size does not match n");
      return FiniteGroup::table(std::move(rows));
    }
    if (type == "product") {
      std::vector<FiniteGroup> factors;
      for (const auto &f : j.at("factors"))
        factors.push_back(group_from_json(f));
      return FiniteGroup::product(std::move(factors));
    }
    throw Error(Errc::ParseError, "unknown group type \"" + type + "\"");
  });
}

json element_to_json(const FiniteGroup &g, Element e) { return g.coords(e); }

Element element_from_json(const FiniteGroup &g, const json &j)
{
  return parsing("group element", [&] { return g.from_coords(coord_list(j)); });
}

json ring_to_json(const Ring &r)
{
  return std::visit(
      [](const auto &d) -> json {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ZmodDesc>)
          return {{"type", "zmod"}, {"n", d.n}};
        else if constexpr (std::is_same_v<T, GfDesc>)
          return {{"type", "gf"}, {"p", d.p}, {"k", d.k}, {"modulus", d.modulus}};
        else {
          json factors = json::array();
          for (const auto &f : d.factors)
            factors.push_back(ring_to_json(f));
          return {{"type", "product"}, {"factors", factors}};
        }
      },
      r.descriptor());
}

Ring ring_from_json(const json &j)
{
  return parsing("ring descriptor", [&] {
    const auto type = text(j, "type");
    if (type == "zmod")
      return Ring::zmod(j.at("n").get<std::uint32_t>());
    if (type == "gf") {
      const auto p = j.at("p").get<std::uint32_t>();
      const auto k = j.value("k", 1u);
      if (j.contains("modulus"))
        return Ring::gf(p, k, j.at("modulus").get<std::vector<std::uint32_t>>());
      return Ring::gf(p, k);
    }
    if (type == "product") {
      std::vector<Ring> factors;
      for (const auto &f : j.at("factors"))
        factors.push_back(ring_from_json(f));
      return Ring::product(std::move(factors));
    }
    throw Error(Errc::ParseError, "unknown ring type \"" + type + "\"");
  });
}

json ring_element_to_json(const Ring &r, RingElement e) { return r.coords(e); }

RingElement ring_element_from_json(const Ring &r, const json &j)
{
  return parsing("ring element", [&] { return r.from_coords(coord_list(j)); });
}

json family_to_json(const DesignFamily &f, const std::optional<Declared> &declared)
{
  const auto &g = f.group();
  json out;
  out["group"] = group_to_json(g);
  if (f.forbidden()) {
    json forb = json::array();
    for (auto e : *f.forbidden())
      forb.push_back(element_to_json(g, e));
    out["forbidden"] = forb;
  } else {
    out["forbidden"] = nullptr;
  }
  json blocks = json::array();
  json mults = json::array();
  bool repeats = false;
  for (const auto &b : f.blocks()) {
    json block = json::array();
    json mult = json::array();
    for (auto e : b.support()) {
      block.push_back(element_to_json(g, e));
      const auto m = b.multiplicity(e);
      repeats = repeats || m > 1;
      mult.push_back(m);
    }
    blocks.push_back(block);
    mults.push_back(mult);
  }
  out["blocks"] = blocks;
  if (repeats)
    out["multiplicities"] = mults;
  if (declared)
    out["declared"] = {{"kind", kind_name(declared->kind)}, {"parameters", declared->parameters}};
  return out;
}

DesignFamily family_from_json(const json &j)
{
  return parsing("family", [&] {
    auto g = group_from_json(j.at("group"));
    std::optional<std::vector<Element>> forbidden;
    if (j.contains("forbidden") && !j.at("forbidden").is_null()) {
      forbidden.emplace();
      for (const auto &e : j.at("forbidden"))
        forbidden->push_back(element_from_json(g, e));
    }
    const auto &blocks_json = j.at("blocks");
    const json *mults = j.contains("multiplicities") && !j.at("multiplicities").is_null()
                            ? &j.at("multiplicities")
                            : nullptr;
    if (mults && mults->size() != blocks_json.size())
      throw Error(Errc::ParseError, "multiplicities must parallel blocks");
    std::vector<Multiset> blocks;
    for (std::size_t i = 0; i < blocks_json.size(); ++i) {
      const auto &bj = blocks_json.at(i);
      if (mults && mults->at(i).size() != bj.size())
        throw Error(Errc::ParseError, "multiplicities must parallel block " + std::to_string(i));
      std::vector<Element> items;
      for (std::size_t k = 0; k < bj.size(); ++k) {
        const auto e = element_from_json(g, bj.at(k));
        const auto m = mults ? mults->at(i).at(k).get<std::size_t>() : 1;
        items.insert(items.end(), m, e);
      }
      blocks.push_back(Multiset(std::move(items)));
    }
    return DesignFamily(std::move(g), std::move(blocks), std::move(forbidden));
  });
}

std::optional<Declared> declared_from_json(const json &j)
{
  if (!j.contains("declared") || j.at("declared").is_null())
    return std::nullopt;
  return parsing("declared", [&] {
    const auto &d = j.at("declared");
    const auto kind = kind_from_name(text(d, "kind"));
    if (!kind)
      throw Error(Errc::ParseError, "unknown family kind");
    return std::optional<Declared>(Declared{*kind, d.value("parameters", std::string{})});
  });
}

json report_to_json(const FiniteGroup &g, const VerificationReport &r)
{
  json out;
  out["kind"] = kind_name(r.kind);
  out["v"] = r.v;
  out["h"] = r.h;
  out["K"] = r.block_sizes;
  out["lambda_or_mu"] = r.lambda_or_mu;
  out["parameters"] = r.parameters();
  out["convention"] = convention_name(r.convention);
  if (auto t = target_name(r.target))
    out["partition_target"] = t;
  else
    out["partition_target"] = nullptr;
  if (r.witness) {
    out["witness"] = {
        {"element", element_to_json(g, r.witness->element)},
        {"expected", r.witness->expected},
        {"actual", r.witness->actual},
        {"reason", r.witness->reason == WitnessReason::Partition ? "partition" : "multiplicity"}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json construction_to_json(const Construction &c)
{
  return family_to_json(c.family, Declared{c.expected_kind, c.expected_parameters});
}

json recipe_to_json(const ExpansionRecipe &r)
{
  const auto &g = r.pdf.group();
  json y = json::array();
  for (auto e : r.y)
    y.push_back(ring_element_to_json(r.ring, e));
  json f = json::array();
  for (auto d : g.elements())
    f.push_back({{"g", element_to_json(g, d)},
                 {"f", ring_element_to_json(r.ring, r.f_map.at(d.index))}});
  json s = json::array();
  for (auto e : r.starters)
    s.push_back(ring_element_to_json(r.ring, e));
  return {{"pdf", family_to_json(r.pdf)},
          {"ring", ring_to_json(r.ring)},
          {"y", y},
          {"f_map", f},
          {"starters", s},
          {"completion", completion_name(r.completion)},
          {"convention", convention_name(r.convention)}};
}

ExpansionRecipe recipe_from_json(const json &j)
{
  return parsing("recipe", [&] {
    auto pdf = family_from_json(j.at("pdf"));
    auto ring = ring_from_json(j.at("ring"));
    const auto &g = pdf.group();
    std::vector<RingElement> y;
    for (const auto &e : j.at("y"))
      y.push_back(ring_element_from_json(ring, e));
    std::vector<RingElement> f(g.order(), ring.zero());
    std::vector<bool> set(g.order(), false);
    for (const auto &entry : j.at("f_map")) {
      const auto d = element_from_json(g, entry.at("g"));
      f[d.index] = ring_element_from_json(ring, entry.at("f"));
      set[d.index] = true;
    }
    if (std::find(set.begin(), set.end(), false) != set.end())
      throw Error(Errc::ParseError, "f_map does not cover the group");
    std::vector<RingElement> starters;
    for (const auto &e : j.at("starters"))
      starters.push_back(ring_element_from_json(ring, e));
    const auto completion = j.value("completion", std::string("single"));
    if (completion != "single" && completion != "per-block")
      throw Error(Errc::ParseError, "completion must be single or per-block");
    const auto conv = j.value("convention", std::string("right"));
    if (conv != "right" && conv != "left")
      throw Error(Errc::ParseError, "convention must be right or left");
    return ExpansionRecipe{std::move(pdf),
                           std::move(ring),
                           std::move(y),
                           std::move(f),
                           std::move(starters),
                           completion == "single" ? Completion::SingleBlock : Completion::PerBlock,
                           conv == "right" ? DiffConvention::RightInverse
                                           : DiffConvention::LeftInverse};
  });
}

json read_json_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::ParseError, "cannot open " + path);
  return parsing(path.c_str(), [&] { return json::parse(in); });
}

void write_json_file(const std::string &path, const json &j)
{
  std::ofstream out(path);
  if (!out)
    throw Error(Errc::ParseError, "cannot write " + path);
  out << j.dump(2) << '\n';
}

} // namespace hpdf::io
