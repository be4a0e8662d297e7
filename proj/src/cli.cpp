#include "orderdim/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "orderdim/dimension.hpp"
#include "orderdim/geometry.hpp"
#include "orderdim/homogeneity.hpp"
#include "orderdim/json_io.hpp"
#include "orderdim/ramsey.hpp"
#include "orderdim/realizer_flow.hpp"

namespace orderdim {

namespace {

std::string quoted(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') q += '\\';
    q += c;
  }
  return q + "\"";
}

struct Options {
  std::string in, out, a, b, structure, cloud, path = "proof";
  std::size_t n = 2, m = 2, count = 0, k = 2, l = 1, r = 2, rmax = 6, steps = 10;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> max_ext;
  bool symmetric = false, no_pruning = false;
};

std::string read_text(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-")
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::kInvalidArgument, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

Json read_json(const std::string& path, std::istream& in) { return parse_json(read_text(path, in)); }

bool is_cloud(const Json& j) { return j.is_object() && j.contains("points"); }

Json orders_json(const FinitePoset& p, const RealizerTuple& t) {
  Json a = Json::array();
  for (const LinearOrder& o : t) a.push_back(order_to_json(p, o));
  return a;
}

Json realizer_set_json(const FinitePoset& p, const RealizerSet& set) {
  Json tuples = Json::array();
  for (const ClassifiedTuple& ct : set.tuples)
    tuples.push_back(Json{{"orders", orders_json(p, ct.tuple)},
                          {"sigma", ct.sigma ? Json(*ct.sigma) : Json(nullptr)}});
  return Json{{"count", set.tuples.size()},
              {"classified", set.classified_count()},
              {"tuples", std::move(tuples)}};
}

Certificate make_certificate(const std::string& kind, const Options& o) {
  if (kind == "ap") return ap_failure_certificate(o.n);
  if (kind == "nonhom") return nonhom_witness(o.n);
  if (kind == "qnlex") return qn_lex_nonhom_witness(o.n);
  return two_homogeneity_certificate(o.n, o.seed, o.steps);
}

// The chosen leaf command, run against parsed options.
std::string execute(const std::string& group, const std::string& cmd, const Options& o,
                    std::istream& in) {
  Budget budget = Budget::from_env();
  if (o.max_ext) budget.max_extensions = budget.max_search_nodes = *o.max_ext;
  Json result;

  if (group == "gen") {
    if (cmd == "crown") result = poset_to_json(crown(o.n));
    else if (cmd == "grid") result = structure_to_json(GridStruct(o.m, o.n).structure());
    else result = cloud_to_json(o.symmetric ? symmetric_sample(o.n, o.count, o.seed)
                                            : sample_dn(o.n, o.count, o.seed));
  } else if (group == "dim") {
    const FinitePoset p = poset_from_json(read_json(o.in, in));
    const DimensionResult d = dimension(p, budget);
    result = Json{{"dim", d.dim}, {"witness", orders_json(p, d.witness)}};
  } else if (group == "embed") {
    const OrderedStructure s = structure_from_json(read_json(o.in, in));
    Json pts = Json::array();
    for (const GridPoint& g : rigid_embed(s)) pts.push_back(g);
    result = Json{{"elements", s.poset().labels()}, {"side", s.size()}, {"points", std::move(pts)}};
  } else if (group == "extend") {
    const OrderedStructure s = structure_from_json(read_json(o.structure, in));
    const PartialEmbedding f = embed_structure(s, cloud_from_json(read_json(o.cloud, in)));
    Json map = Json::array();
    for (std::size_t e = 0; e < s.size(); ++e)
      map.push_back(Json{{"element", s.poset().label(e)}, {"point", *f.image(e)}});
    result = Json{{"cloud", cloud_to_json(f.target())}, {"embedding", std::move(map)},
                  {"valid", f.is_valid()}};
  } else if (group == "iso") {
    const BackAndForthResult r = back_and_forth_iso(cloud_from_json(read_json(o.a, in)),
                                                    cloud_from_json(read_json(o.b, in)), o.steps);
    Json pairs = Json::array();
    for (const auto& [x, y] : r.pairs) pairs.push_back(Json::array({x, y}));
    result = Json{{"a", cloud_to_json(r.a)}, {"b", cloud_to_json(r.b)},
                  {"pairs", std::move(pairs)},
                  {"partial_isomorphism", r.is_partial_isomorphism()}};
  } else if (group == "check") {
    const Json j = read_json(o.in, in);
    result = report_to_json(is_cloud(j) ? check_dpo_fragment(cloud_from_json(j))
                                        : check_dpo_fragment(structure_from_json(j)));
  } else if (group == "certify") {
    if (cmd == "replay") {
      const Certificate c = certificate_from_json(read_json(o.in, in));
      result = Json{{"kind", std::string(to_string(c.kind))}, {"n", c.n}, {"replayed", replay(c)}};
    } else {
      result = certificate_to_json(make_certificate(cmd, o));
    }
  } else if (group == "ramsey") {
    RamseySearchOptions opts{!o.no_pruning, budget};
    if (cmd == "number") {
      const auto r = product_ramsey_number(o.k, o.l, o.m, o.n, o.rmax, opts);
      result = Json{{"k", o.k}, {"l", o.l}, {"m", o.m}, {"n", o.n}, {"rmax", o.rmax},
                    {"number", r ? Json(*r) : Json(nullptr)}};
    } else {
      const OrderedStructure a = structure_from_json(read_json(o.a, in));
      const OrderedStructure b = structure_from_json(read_json(o.b, in));
      const WitnessPath path = o.path == "exhaustive" ? WitnessPath::kExhaustive : WitnessPath::kProof;
      const WitnessOutcome w = ramsey_witness_outcome(a, b, o.k, o.r, path, opts);
      result = Json{{"verdict", w.verdict}, {"path", o.path},
                    {"decided_by_reduction", w.decided_by_reduction}};
    }
  } else if (group == "flow") {
    const Json j = read_json(o.in, in);
    if (cmd == "decompose") {
      result = decomposition_to_json(semidirect_decomposition(cloud_from_json(j), budget));
    } else if (is_cloud(j)) {
      const PointCloud c = cloud_from_json(j);
      result = realizer_set_json(induced_structure(c).poset(), enumerate_cloud_realizers(c, budget));
    } else {
      const OrderedStructure s = structure_from_json(j);
      result = realizer_set_json(s.poset(), enumerate_realizers(s, budget));
    }
  } else {
    return hasse_dot(poset_from_json(read_json(o.in, in)));
  }
  return result.dump(2) + "\n";
}

}  // namespace

std::string hasse_dot(const FinitePoset& p) {
  std::ostringstream s;
  s << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const std::string& l : p.labels()) s << "  " << quoted(l) << ";\n";
  for (const auto& [a, b] : p.covering_pairs())
    s << "  " << quoted(p.label(a)) << " -> " << quoted(p.label(b)) << ";\n";
  s << "}\n";
  return s.str();
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Order dimension toolkit", "orderdim"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::pair<CLI::App*, CLI::App*>> leaves;  // (group, leaf)

  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& desc) {
    CLI::App* c = group->add_subcommand(name, desc);
    c->add_option("--out", o.out, "write the result to FILE");
    leaves.emplace_back(group, c);
    return c;
  };
  auto group = [&](const std::string& name, const std::string& desc) {
    CLI::App* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    return g;
  };

  CLI::App* gen = group("gen", "generate posets, grids and samples");
  leaf(gen, "crown", "crown poset")->add_option("--n", o.n)->required();
  CLI::App* grid = leaf(gen, "grid", "m^n grid with its lex orders");
  grid->add_option("--m", o.m)->required();
  grid->add_option("--n", o.n)->required();
  CLI::App* sample = leaf(gen, "sample", "colinearity-free sample of D_n");
  sample->add_option("--n", o.n)->required();
  sample->add_option("--count", o.count)->required();
  sample->add_option("--seed", o.seed, "default 0");
  sample->add_flag("--symmetric", o.symmetric, "close under coordinate permutations");

  // Top-level commands without a second word are their own leaf.
  CLI::App* dim = app.add_subcommand("dim", "order dimension with witness realizer");
  dim->add_option("--in", o.in, "poset JSON (stdin when absent)");
  dim->add_option("--max-ext", o.max_ext, "search step limit");
  dim->add_option("--out", o.out);
  leaves.emplace_back(dim, dim);

  leaf(group("embed", "embeddings"), "rigid", "rigid grid embedding")
      ->add_option("--in", o.in, "structure JSON");
  CLI::App* forth = leaf(group("extend", "extensions"), "forth", "embed a structure into a cloud");
  forth->add_option("--struct", o.structure)->required();
  forth->add_option("--cloud", o.cloud)->required();
  CLI::App* bnf = leaf(group("iso", "isomorphisms"), "bnf", "back-and-forth between two clouds");
  bnf->add_option("--a", o.a)->required();
  bnf->add_option("--b", o.b)->required();
  bnf->add_option("--steps", o.steps);
  leaf(group("check", "axiom checks"), "dpo", "check the axioms on a finite structure")
      ->add_option("--in", o.in);

  CLI::App* certify = group("certify", "certificates");
  for (const char* kind : {"ap", "nonhom", "qnlex", "twohom"}) {
    CLI::App* c = leaf(certify, kind, std::string(kind) + " certificate");
    c->add_option("--n", o.n);
    if (std::string(kind) == "twohom") {
      c->add_option("--seed", o.seed, "default 0");
      c->add_option("--steps", o.steps);
    }
  }
  leaf(certify, "replay", "rebuild a certificate and compare")->add_option("--in", o.in);

  CLI::App* ramsey = group("ramsey", "product Ramsey");
  CLI::App* number = leaf(ramsey, "number", "least r forcing a monochromatic m^n-subgrid");
  for (auto [flag, slot] : {std::pair{"--k", &o.k}, {"--l", &o.l}, {"--m", &o.m}, {"--n", &o.n},
                            {"--rmax", &o.rmax}})
    number->add_option(flag, *slot)->required();
  CLI::App* witness = leaf(ramsey, "witness", "whether r^n arrows b for colorings of a");
  witness->add_option("--a", o.a)->required();
  witness->add_option("--b", o.b)->required();
  witness->add_option("--k", o.k)->required();
  witness->add_option("--r", o.r)->required();
  witness->add_option("--path", o.path)->check(CLI::IsMember({"proof", "exhaustive"}));
  for (CLI::App* c : {number, witness}) c->add_flag("--no-pruning", o.no_pruning);

  CLI::App* flow = group("flow", "realizers and automorphisms");
  leaf(flow, "realizers", "realizer tuples, classified for clouds")->add_option("--in", o.in);
  leaf(flow, "decompose", "automorphism factorization")->add_option("--in", o.in);
  leaf(group("export", "export"), "dot", "Hasse diagram")->add_option("--in", o.in);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  }

  std::string group_name, cmd;
  for (const auto& [g, c] : leaves)
    if (c->parsed()) group_name = g->get_name(), cmd = c->get_name();

  std::string text;
  try {
    text = execute(group_name, cmd, o, in);
  } catch (const Error& e) {
    err << Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()},
                {"witness", e.witness()}}.dump()
        << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << Json{{"error", "ParseError"}, {"message", e.what()}, {"witness", Json::array()}}.dump()
        << "\n";
    return 1;
  }

  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out);
    if (!f || !(f << text)) {
      err << Json{{"error", "InvalidArgument"}, {"message", "cannot write '" + o.out + "'"},
                  {"witness", Json::array()}}.dump()
          << "\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace orderdim
