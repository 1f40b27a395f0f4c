#pragma once

// Text formats and JSON encodings used by the command-line tool.
//
// Subgroup file:      first line "gens: a b ...", then one generator word per line.
// Presentation file:  first line "gens: a b ...", then "rel: <word>" lines.
// Blank lines and lines starting with '#' are ignored in both.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "subconj/conjugacy.hpp"
#include "subconj/presentation.hpp"
#include "subconj/quotients.hpp"
#include "subconj/semidecide.hpp"
#include "subconj/stallings.hpp"
#include "subconj/word.hpp"

namespace subconj {

using Json = nlohmann::ordered_json;

struct SubgroupFile {
  Alphabet alphabet;
  std::vector<Word> generators;
};

// `source` names the input in error messages ("<source>:<line>: ...").
SubgroupFile parse_subgroup(std::string_view text, const std::string& source);
Presentation parse_presentation(std::string_view text, const std::string& source);

SubgroupFile read_subgroup_file(const std::string& path);
Presentation read_presentation_file(const std::string& path);

// {"vertices", "base", "edges": [{"src", "dst", "label"}]}, edges sorted by
// (src, label) and labels given by generator name.
Json graph_json(const SubgroupGraph& g, const Alphabet& alphabet);

// {"decision", "conjugator"?, "checkedVertices"}
Json conjugacy_json(const ConjugacyAnswer& answer, const Alphabet& alphabet);

// {gen: cycle notation} in generator order.
Json images_json(const Homomorphism& hom, const Alphabet& alphabet);

// {"degree", "images", "h1ImageSize", "h2ImageSize"}
Json witness_json(const Homomorphism& hom, const Alphabet& alphabet, std::size_t h1_image_size,
                  std::size_t h2_image_size);

// {"status", "conjugator"?, "level"?, "witness"?, "budgetSpent"}.  The
// witness sizes refer to the caller's H1 and H2.
Json semidecision_json(const SemiDecision& d, const Alphabet& alphabet);

std::string_view status_name(Status s);

}  // namespace subconj
