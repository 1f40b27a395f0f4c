#include "subconj/cli.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "subconj/conjugacy.hpp"
#include "subconj/error.hpp"
#include "subconj/io.hpp"
#include "subconj/quotients.hpp"
#include "subconj/semidecide.hpp"
#include "subconj/stallings.hpp"

namespace subconj {

namespace {

constexpr int kDecided = 0;
constexpr int kInputError = 1;
constexpr int kUnknown = 2;

struct Options {
  std::string sub;
  std::vector<std::string> subs;
  std::string h1;
  std::string h2;
  std::string g1;
  std::string pres;
  std::string word;
  std::vector<std::string> images;
  std::vector<std::string> witnesses;
  std::size_t degree = 0;
  Budget budget;
};

struct Loaded {
  Alphabet alphabet;
  std::vector<Word> gens;
  SubgroupGraph graph;
};

Loaded load(const std::string& path) {
  SubgroupFile f = read_subgroup_file(path);
  SubgroupGraph g = build_subgroup_graph(f.alphabet, f.generators);
  return Loaded{std::move(f.alphabet), std::move(f.generators), std::move(g)};
}

void require_same(const Alphabet& a, const Alphabet& b, const std::string& what) {
  if (!(a == b)) {
    throw InputError("alphabet mismatch: " + what);
  }
}

Homomorphism parse_images(const Alphabet& alphabet, const std::vector<std::string>& specs,
                          std::size_t degree) {
  if (degree == 0) {
    throw InputError("--image requires --degree");
  }
  std::vector<Permutation> images(alphabet.rank(), Permutation(degree));
  std::vector<bool> seen(alphabet.rank(), false);
  for (const std::string& spec : specs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos) {
      throw InputError("bad --image '" + spec + "', expected gen=(cycles)");
    }
    std::uint32_t g = alphabet.index_of(spec.substr(0, eq));
    if (seen[g]) {
      throw InputError("generator '" + alphabet.name(g) + "' given twice");
    }
    seen[g] = true;
    images[g] = Permutation::parse_cycles(spec.substr(eq + 1), degree);
  }
  return Homomorphism(degree, std::move(images));
}

Json hom_graph_json(const Homomorphism& hom, const SubgroupGraph& d, const Alphabet& alphabet) {
  return Json{{"degree", hom.degree()},
              {"images", images_json(hom, alphabet)},
              {"index", *index(d)},
              {"graph", graph_json(d, alphabet)}};
}

void check_conjugator(const SubgroupGraph& target, const std::vector<Word>& gens,
                      const ConjugacyAnswer& answer) {
  if (!answer.yes) {
    return;
  }
  for (const Word& w : gens) {
    if (!target.contains(conjugate(w, *answer.conjugator))) {
      throw std::logic_error("conjugator failed re-validation");
    }
  }
}

void check_semidecision(const Presentation& pres, const std::vector<Word>& h1,
                        const std::vector<Word>& h2, const SemiDecision& d) {
  bool ok = true;
  if (d.status == Status::yes) {
    ok = certify_yes(pres, h1, h2, *d.conjugator, d.level);
  } else if (d.status == Status::no) {
    ok = certify_witness(pres, d.witness->hom, h2, h1);
  }
  if (!ok) {
    throw std::logic_error("certificate failed re-validation");
  }
}

int emit(std::ostream& out, const Json& j, int code) {
  out << j.dump() << '\n';
  return code;
}

using Log = std::function<void(const std::string&)>;
using Handler = int (*)(const Options&, std::ostream&, const Log&);

int cmd_core(const Options& o, std::ostream& out, const Log& log) {
  Loaded s = load(o.sub);
  log("core: " + std::to_string(s.graph.vertex_count()) + " vertices, " +
      std::to_string(s.graph.edge_count()) + " edges");
  return emit(out, graph_json(s.graph, s.alphabet), kDecided);
}

int cmd_member(const Options& o, std::ostream& out, const Log&) {
  Loaded s = load(o.sub);
  Word w = parse_word(s.alphabet, o.word);
  return emit(out, Json{{"member", s.graph.contains(w)}}, kDecided);
}

int cmd_index(const Options& o, std::ostream& out, const Log&) {
  Loaded s = load(o.sub);
  auto n = index(s.graph);
  return emit(out, n ? Json{{"index", *n}} : Json{{"index", "infinite"}}, kDecided);
}

int cmd_rank(const Options& o, std::ostream& out, const Log&) {
  Loaded s = load(o.sub);
  return emit(out, Json{{"rank", rank(s.graph)}}, kDecided);
}

int cmd_basis(const Options& o, std::ostream& out, const Log&) {
  Loaded s = load(o.sub);
  Json words = Json::array();
  for (const Word& w : basis(s.graph)) {
    words.push_back(to_string(w, s.alphabet));
  }
  return emit(out, Json{{"basis", std::move(words)}}, kDecided);
}

int cmd_intersect(const Options& o, std::ostream& out, const Log& log) {
  if (o.subs.size() != 2) {
    throw InputError("intersect needs exactly two --sub files");
  }
  Loaded a = load(o.subs[0]);
  Loaded b = load(o.subs[1]);
  require_same(a.alphabet, b.alphabet, o.subs[0] + " vs " + o.subs[1]);
  SubgroupGraph d = intersect(a.graph, b.graph);
  log("intersect: " + std::to_string(d.vertex_count()) + " vertices");
  return emit(out, graph_json(d, a.alphabet), kDecided);
}

int cmd_conj(const Options& o, std::ostream& out, const Log& log) {
  Loaded a = load(o.h1);
  Loaded b = load(o.h2);
  require_same(a.alphabet, b.alphabet, o.h1 + " vs " + o.h2);
  ConjugacyAnswer ans = conjugator(a.alphabet, a.gens, b.gens);
  check_conjugator(b.graph, a.gens, ans);
  log("conj: checked " + std::to_string(ans.checked_vertices) + " core vertices");
  return emit(out, conjugacy_json(ans, a.alphabet), kDecided);
}

int cmd_conj_into(const Options& o, std::ostream& out, const Log& log) {
  Loaded a = load(o.h1);
  Loaded b = load(o.h2);
  require_same(a.alphabet, b.alphabet, o.h1 + " vs " + o.h2);
  ConjugacyAnswer ans = into_conjugator(a.alphabet, a.gens, b.graph);
  check_conjugator(b.graph, a.gens, ans);
  log("conj-into: checked " + std::to_string(ans.checked_vertices) + " core vertices");
  return emit(out, conjugacy_json(ans, a.alphabet), kDecided);
}

int cmd_elt_into(const Options& o, std::ostream& out, const Log&) {
  Loaded s = load(o.sub);
  Word w = parse_word(s.alphabet, o.word);
  ConjugacyAnswer ans = element_into_conjugator(s.alphabet, w, s.graph);
  check_conjugator(s.graph, {w}, ans);
  return emit(out, conjugacy_json(ans, s.alphabet), kDecided);
}

Presentation presentation_for(const Options& o, const Alphabet& alphabet) {
  if (o.pres.empty()) {
    return Presentation::free(alphabet);
  }
  Presentation p = read_presentation_file(o.pres);
  require_same(p.alphabet, alphabet, o.pres + " vs subgroup files");
  return p;
}

int cmd_witness(const Options& o, std::ostream& out, const Log& log) {
  Loaded a = load(o.h1);
  Loaded b = load(o.h2);
  require_same(a.alphabet, b.alphabet, o.h1 + " vs " + o.h2);
  Presentation pres = presentation_for(o, a.alphabet);
  auto w = find_witness(pres, a.gens, b.gens, o.budget.max_degree);
  if (!w) {
    log("witness: none up to degree " + std::to_string(o.budget.max_degree));
    return emit(out, Json{{"witness", nullptr}, {"maxDegree", o.budget.max_degree}}, kUnknown);
  }
  if (!certify_witness(pres, w->hom, a.gens, b.gens)) {
    throw std::logic_error("witness failed re-validation");
  }
  return emit(out, witness_json(w->hom, a.alphabet, w->h1_image.size(), w->h2_image.size()),
              kDecided);
}

int cmd_witness_subgroup(const Options& o, std::ostream& out, const Log& log) {
  Loaded a = load(o.h1);
  if (!o.images.empty() || o.degree != 0) {
    Homomorphism hom = parse_images(a.alphabet, o.images, o.degree);
    SubgroupGraph d = witness_subgroup(a.alphabet, hom, a.gens);
    return emit(out, hom_graph_json(hom, d, a.alphabet), kDecided);
  }
  if (o.h2.empty()) {
    throw InputError("witness-subgroup needs --image/--degree or --h2");
  }
  Loaded b = load(o.h2);
  require_same(a.alphabet, b.alphabet, o.h1 + " vs " + o.h2);
  auto w = find_witness(Presentation::free(a.alphabet), a.gens, b.gens, o.budget.max_degree);
  if (!w) {
    log("witness-subgroup: no witness up to degree " + std::to_string(o.budget.max_degree));
    return emit(out, Json{{"witness", nullptr}, {"maxDegree", o.budget.max_degree}}, kUnknown);
  }
  SubgroupGraph d = witness_subgroup(a.alphabet, w->hom, a.gens);
  if (into_conjugator(a.alphabet, b.gens, d).yes) {
    throw std::logic_error("witness subgroup failed re-validation");
  }
  return emit(out, hom_graph_json(w->hom, d, a.alphabet), kDecided);
}

int cmd_combine_witness(const Options& o, std::ostream& out, const Log& log) {
  Loaded g1 = load(o.g1);
  Loaded a = load(o.h1);
  Loaded b = load(o.h2);
  require_same(g1.alphabet, a.alphabet, o.g1 + " vs " + o.h1);
  require_same(a.alphabet, b.alphabet, o.h1 + " vs " + o.h2);
  std::vector<SubgroupGraph> per_coset;
  if (o.witnesses.empty()) {
    auto found = find_coset_witnesses(a.alphabet, g1.graph, a.gens, b.gens, o.budget.max_degree);
    if (!found) {
      log("combine-witness: some coset has no witness up to degree " +
          std::to_string(o.budget.max_degree));
      return emit(out, Json{{"witness", nullptr}, {"maxDegree", o.budget.max_degree}}, kUnknown);
    }
    per_coset = std::move(*found);
  } else {
    for (const std::string& path : o.witnesses) {
      Loaded d = load(path);
      require_same(d.alphabet, a.alphabet, path + " vs " + o.h1);
      per_coset.push_back(std::move(d.graph));
    }
  }
  SubgroupGraph d = combine_witnesses(a.alphabet, g1.graph, a.gens, b.gens, per_coset);
  return emit(out, Json{{"index", *index(d)}, {"graph", graph_json(d, a.alphabet)}}, kDecided);
}

int semidecision_exit(const SemiDecision& d) {
  return d.status == Status::unknown ? kUnknown : kDecided;
}

int cmd_semidecide(const Options& o, std::ostream& out, const Log& log) {
  SubgroupFile a = read_subgroup_file(o.h1);
  SubgroupFile b = read_subgroup_file(o.h2);
  Presentation pres = read_presentation_file(o.pres);
  require_same(pres.alphabet, a.alphabet, o.pres + " vs " + o.h1);
  require_same(pres.alphabet, b.alphabet, o.pres + " vs " + o.h2);
  SemiDecision d = semi_decide_into(pres, a.generators, b.generators, o.budget);
  check_semidecision(pres, a.generators, b.generators, d);
  log("semidecide: " + std::string(status_name(d.status)));
  return emit(out, semidecision_json(d, pres.alphabet), semidecision_exit(d));
}

int cmd_mihailova(const Options& o, std::ostream& out, const Log& log) {
  Presentation source = read_presentation_file(o.pres);
  Word u = parse_word(source.alphabet, o.word);
  MihailovaInstance inst = mihailova_generators(source);
  SemiDecision d = mihailova_probe(inst, u, o.budget);
  check_semidecision(inst.ambient, {to_a_letters(inst, u)}, inst.l_gens, d);
  log("mihailova: " + std::to_string(inst.l_gens.size()) + " generators of L_H, " +
      std::string(status_name(d.status)));
  return emit(out, semidecision_json(d, inst.ambient.alphabet), semidecision_exit(d));
}

void add_budget(CLI::App* cmd, Options& o, bool all) {
  cmd->add_option("--max-degree", o.budget.max_degree, "largest permutation degree searched")
      ->capture_default_str();
  if (all) {
    cmd->add_option("--max-conj-len", o.budget.max_conj_len, "longest conjugator tried")
        ->capture_default_str();
    cmd->add_option("--max-level", o.budget.max_level, "deepest relator-conjugate level")
        ->capture_default_str();
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subgroup conjugacy in free and finitely presented groups", "subconj"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  bool verbose = false;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json"}));
  app.add_flag("--verbose", verbose, "log progress to stderr");

  Options o;
  std::map<CLI::App*, Handler> handlers;
  auto add = [&](const char* name, const char* help, Handler fn) {
    CLI::App* cmd = app.add_subcommand(name, help);
    handlers[cmd] = fn;
    return cmd;
  };
  auto sub_cmd = [&](const char* name, const char* help, Handler fn) {
    CLI::App* cmd = add(name, help, fn);
    cmd->add_option("--sub", o.sub, "subgroup file")->required();
    return cmd;
  };
  auto pair_cmd = [&](const char* name, const char* help, Handler fn) {
    CLI::App* cmd = add(name, help, fn);
    cmd->add_option("--h1", o.h1, "subgroup file for H1")->required();
    cmd->add_option("--h2", o.h2, "subgroup file for H2")->required();
    return cmd;
  };

  sub_cmd("core", "print the folded core graph", cmd_core);
  sub_cmd("member", "test membership of a word", cmd_member)
      ->add_option("--word", o.word, "word, e.g. \"a b^-1\"")
      ->required();
  sub_cmd("index", "index in the free group", cmd_index);
  sub_cmd("rank", "rank of the subgroup", cmd_rank);
  sub_cmd("basis", "free basis from a spanning tree", cmd_basis);
  add("intersect", "intersection of two subgroups", cmd_intersect)
      ->add_option("--sub", o.subs, "subgroup file (give twice)")
      ->required();
  pair_cmd("conj", "is H1 conjugate to H2", cmd_conj);
  pair_cmd("conj-into", "is H1 conjugate into H2", cmd_conj_into);
  CLI::App* elt = sub_cmd("elt-into", "is some conjugate of a word in H", cmd_elt_into);
  elt->add_option("--word", o.word, "word")->required();

  CLI::App* wit = pair_cmd("witness", "finite quotient where H2 is not conjugate into H1", cmd_witness);
  wit->add_option("--pres", o.pres, "presentation file (default: free group)");
  add_budget(wit, o, false);

  CLI::App* ws = add("witness-subgroup", "the subgroup H1 * ker(phi)", cmd_witness_subgroup);
  ws->add_option("--h1", o.h1, "subgroup file for H1")->required();
  ws->add_option("--h2", o.h2, "search a witness against this H2");
  ws->add_option("--image", o.images, "generator image, e.g. \"a=(0 1)\"");
  ws->add_option("--degree", o.degree, "degree of the given images");
  add_budget(ws, o, false);

  CLI::App* cw = pair_cmd("combine-witness", "combine per-coset witnesses in G1", cmd_combine_witness);
  cw->add_option("--g1", o.g1, "finite-index subgroup file")->required();
  cw->add_option("--witness", o.witnesses, "per-coset witness files, in coset order");
  add_budget(cw, o, false);

  CLI::App* sd = pair_cmd("semidecide", "two-sided search in a finitely presented group", cmd_semidecide);
  sd->add_option("--pres", o.pres, "presentation file")->required();
  add_budget(sd, o, true);

  CLI::App* mh = add("mihailova", "word problem probe through L_H", cmd_mihailova);
  mh->add_option("--pres", o.pres, "presentation of H")->required();
  mh->add_option("--word", o.word, "word over the generators of H")->required();
  add_budget(mh, o, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kDecided;
    }
    return emit(out, Json{{"error", e.what()}}, kInputError);
  }

  Log log = [&](const std::string& msg) {
    if (verbose) {
      err << "subconj: " << msg << '\n';
    }
  };
  try {
    for (auto& [cmd, fn] : handlers) {
      if (cmd->parsed()) {
        return fn(o, out, log);
      }
    }
    return emit(out, Json{{"error", "no subcommand"}}, kInputError);
  } catch (const InputError& e) {
    return emit(out, Json{{"error", e.what()}}, kInputError);
  } catch (const std::invalid_argument& e) {
    return emit(out, Json{{"error", e.what()}}, kInputError);
  } catch (const std::exception& e) {
    return emit(out, Json{{"error", std::string("internal: ") + e.what()}}, kInputError);
  }
}

}  // namespace subconj
