#include <doctest.h>

#include "subconj/error.hpp"
#include "subconj/io.hpp"

using namespace subconj;

TEST_CASE("subgroup file") {
  SubgroupFile f = parse_subgroup("gens: a b\n# comment\na a\n\n b \n1\n", "k.sub");
  CHECK(f.alphabet.names() == std::vector<std::string>{"a", "b"});
  REQUIRE(f.generators.size() == 3);
  CHECK(to_string(f.generators[0], f.alphabet) == "a a");
  CHECK(f.generators[2].empty());
  CHECK(parse_subgroup("gens: a\r\na\r\n", "crlf.sub").generators.size() == 1);
}

TEST_CASE("errors name file, line and token") {
  CHECK_THROWS_WITH_AS(parse_subgroup("gens: a b\na\nb c\n", "h.sub"),
                       "h.sub:3: bad token 'c'", InputError);
  CHECK_THROWS_WITH_AS(parse_subgroup("a b\n", "h.sub"),
                       "h.sub:1: expected 'gens:' line, got token 'a'", InputError);
  CHECK_THROWS_WITH_AS(parse_subgroup("", "h.sub"), "h.sub: missing 'gens:' line", InputError);
  CHECK_THROWS_WITH_AS(parse_subgroup("\ngens: a a\n", "h.sub"),
                       "h.sub:2: duplicate generator name 'a'", InputError);
  CHECK_THROWS_WITH_AS(parse_presentation("gens: a\nrel: a\nbad a\n", "p.pres"),
                       "p.pres:3: expected 'rel:' line, got token 'bad'", InputError);
  CHECK_THROWS_WITH_AS(parse_presentation("gens: a\nrel: a^-2\n", "p.pres"),
                       "p.pres:2: bad token 'a^-2'", InputError);
  CHECK_THROWS_AS(read_subgroup_file("/nonexistent/x.sub"), InputError);
}

TEST_CASE("presentation file") {
  Presentation p = parse_presentation("gens: x1 x2\nrel: x1\nrel: x2 x2 x2\n", "h.pres");
  CHECK(p.rank() == 2);
  REQUIRE(p.relators.size() == 2);
  CHECK(to_string(p.relators[1], p.alphabet) == "x2 x2 x2");
  CHECK(parse_presentation("gens: a b\n", "f.pres").relators.empty());
}

TEST_CASE("graph and answer JSON") {
  Alphabet ab({"a", "b"});
  SubgroupGraph g = build_subgroup_graph(ab, {parse_word(ab, "a a"), parse_word(ab, "b")});
  CHECK(graph_json(g, ab).dump() ==
        R"({"vertices":2,"base":0,"edges":[{"src":0,"dst":1,"label":"a"},{"src":0,"dst":0,"label":"b"},{"src":1,"dst":0,"label":"a"}]})");
  ConjugacyAnswer yes{true, parse_word(ab, "a^-1"), 2};
  CHECK(conjugacy_json(yes, ab).dump() == R"({"decision":"yes","conjugator":"a^-1","checkedVertices":2})");
  ConjugacyAnswer no{false, std::nullopt, 2};
  CHECK(conjugacy_json(no, ab).dump() == R"({"decision":"no","checkedVertices":2})");
  Homomorphism h(2, {Permutation::parse_cycles("(0 1)", 2), Permutation(2)});
  CHECK(witness_json(h, ab, 1, 2).dump() ==
        R"j({"degree":2,"images":{"a":"(0 1)","b":"()"},"h1ImageSize":1,"h2ImageSize":2})j");
}
