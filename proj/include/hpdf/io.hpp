#pragma once

#include "hpdf/constructions.hpp"
#include "hpdf/group.hpp"
#include "hpdf/multiset.hpp"
#include "hpdf/ring.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace hpdf::io {

using nlohmann::json;

// Every *_from_json throws Error(ParseError) or a domain error from the
// corresponding constructor.

json group_to_json(const FiniteGroup &g);
FiniteGroup group_from_json(const json &j);

/// Elements serialize as coordinate arrays.
json element_to_json(const FiniteGroup &g, Element e);
Element element_from_json(const FiniteGroup &g, const json &j);

json ring_to_json(const Ring &r);
Ring ring_from_json(const json &j);
json ring_element_to_json(const Ring &r, RingElement e);
RingElement ring_element_from_json(const Ring &r, const json &j);

/// What a family file claims to be; checked by the verify command.
struct Declared {
  FamilyKind kind;
  std::string parameters;
};

/// {"group", "forbidden", "blocks", optional "multiplicities", optional
/// "declared"}. Blocks list distinct elements; "multiplicities" is present
/// only when some block repeats an element.
json family_to_json(const DesignFamily &f, const std::optional<Declared> &declared = std::nullopt);
DesignFamily family_from_json(const json &j);
std::optional<Declared> declared_from_json(const json &j);

json report_to_json(const FiniteGroup &g, const VerificationReport &r);

/// Construction output: the family declared with its predicted parameters.
json construction_to_json(const Construction &c);

json recipe_to_json(const ExpansionRecipe &r);
ExpansionRecipe recipe_from_json(const json &j);

json read_json_file(const std::string &path);
void write_json_file(const std::string &path, const json &j);

} // namespace hpdf::io
