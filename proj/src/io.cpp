#include "subconj/io.hpp"

#include <fstream>
#include <sstream>

#include "subconj/error.hpp"

namespace subconj {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) {
    return {};
  }
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    std::string_view t = trim(raw);
    if (!t.empty() && t.front() != '#') {
      out.push_back({number, t});
    }
  }
  return out;
}

[[noreturn]] void fail_at(const std::string& source, std::size_t line, const std::string& what) {
  throw InputError(source + ":" + std::to_string(line) + ": " + what);
}

std::string first_token(std::string_view s) {
  auto end = s.find_first_of(" \t");
  return std::string(s.substr(0, end));
}

// Strips a "key:" prefix; returns false if the line does not start with it.
bool strip_key(std::string_view& line, std::string_view key) {
  if (line.substr(0, key.size()) != key) {
    return false;
  }
  line = trim(line.substr(key.size()));
  return true;
}

Alphabet parse_gens_line(const std::vector<Line>& lines, const std::string& source) {
  if (lines.empty()) {
    throw InputError(source + ": missing 'gens:' line");
  }
  std::string_view head = lines.front().text;
  if (!strip_key(head, "gens:")) {
    fail_at(source, lines.front().number,
            "expected 'gens:' line, got token '" + first_token(head) + "'");
  }
  std::vector<std::string> names;
  std::istringstream in{std::string(head)};
  for (std::string name; in >> name;) {
    names.push_back(name);
  }
  try {
    return Alphabet(std::move(names));
  } catch (const InputError& e) {
    fail_at(source, lines.front().number, e.what());
  }
}

Word parse_at(const Alphabet& alphabet, const Line& line, std::string_view text,
              const std::string& source) {
  try {
    return parse_word(alphabet, text);
  } catch (const InputError& e) {
    fail_at(source, line.number, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError(path + ": cannot open file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

SubgroupFile parse_subgroup(std::string_view text, const std::string& source) {
  const auto lines = content_lines(text);
  SubgroupFile out{parse_gens_line(lines, source), {}};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    out.generators.push_back(parse_at(out.alphabet, lines[i], lines[i].text, source));
  }
  return out;
}

Presentation parse_presentation(std::string_view text, const std::string& source) {
  const auto lines = content_lines(text);
  Alphabet alphabet = parse_gens_line(lines, source);
  std::vector<Word> relators;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string_view body = lines[i].text;
    if (!strip_key(body, "rel:")) {
      fail_at(source, lines[i].number,
              "expected 'rel:' line, got token '" + first_token(body) + "'");
    }
    relators.push_back(parse_at(alphabet, lines[i], body, source));
  }
  return Presentation(std::move(alphabet), std::move(relators));
}

SubgroupFile read_subgroup_file(const std::string& path) {
  return parse_subgroup(read_file(path), path);
}

Presentation read_presentation_file(const std::string& path) {
  return parse_presentation(read_file(path), path);
}

Json graph_json(const SubgroupGraph& g, const Alphabet& alphabet) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back(Json{{"src", e.src}, {"dst", e.dst}, {"label", alphabet.name(e.label)}});
  }
  return Json{{"vertices", g.vertex_count()}, {"base", g.base()}, {"edges", std::move(edges)}};
}

Json conjugacy_json(const ConjugacyAnswer& answer, const Alphabet& alphabet) {
  Json j;
  j["decision"] = answer.yes ? "yes" : "no";
  if (answer.conjugator) {
    j["conjugator"] = to_string(*answer.conjugator, alphabet);
  }
  j["checkedVertices"] = answer.checked_vertices;
  return j;
}

Json images_json(const Homomorphism& hom, const Alphabet& alphabet) {
  Json images = Json::object();
  for (std::size_t i = 0; i < hom.rank(); ++i) {
    images[alphabet.name(i)] = hom.images()[i].cycle_notation();
  }
  return images;
}

Json witness_json(const Homomorphism& hom, const Alphabet& alphabet, std::size_t h1_image_size,
                  std::size_t h2_image_size) {
  return Json{{"degree", hom.degree()},
              {"images", images_json(hom, alphabet)},
              {"h1ImageSize", h1_image_size},
              {"h2ImageSize", h2_image_size}};
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::yes:
      return "yes";
    case Status::no:
      return "no";
    case Status::unknown:
      return "unknown";
  }
  return "unknown";
}

Json semidecision_json(const SemiDecision& d, const Alphabet& alphabet) {
  Json j;
  j["status"] = status_name(d.status);
  if (d.conjugator) {
    j["conjugator"] = to_string(*d.conjugator, alphabet);
    j["level"] = d.level;
  }
  if (d.witness) {
    // The search ran with the roles of H1 and H2 exchanged.
    j["witness"] = witness_json(d.witness->hom, alphabet, d.witness->h2_image.size(),
                                d.witness->h1_image.size());
  }
  j["budgetSpent"] = Json{{"conjugatorLength", d.spent.conjugator_length},
                          {"approximantLevel", d.spent.approximant_level},
                          {"maxDegree", d.spent.max_degree}};
  return j;
}

}  // namespace subconj
