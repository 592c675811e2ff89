#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gulf/certificate.hpp"
#include "gulf/constructions.hpp"
#include "gulf/cover.hpp"
#include "gulf/guest_class.hpp"
#include "gulf/io.hpp"
#include "gulf/params.hpp"
#include "gulf/solve.hpp"
#include "gulf/transforms.hpp"

using namespace gulf;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

enum Exit { ok = 0, invalid = 1, undecided = 2, usage = 3 };

// Thrown for bad input files, unknown names and the like.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int emit(const json &doc, int code) {
  std::cout << doc.dump(2) << "\n";
  return code;
}

int fail(const std::string &what, int code) {
  std::cerr << "gulf: " << what << "\n";
  return emit(json{{"error", what}, {"exit_code", code}}, code);
}

json graph_json(const Graph &g) { return json{{"n", g.n()}, {"m", g.m()}, {"graph6", to_graph6(g)}}; }

json cover_json(const Cover &c) { return json::parse(cover_to_json(c)); }

Graph load_graph(const std::string &path) {
  try {
    return read_graph_file(path);
  } catch (const std::exception &e) {
    throw UsageError("cannot read graph " + path + ": " + e.what());
  }
}

Cover load_cover(const std::string &path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const std::exception &e) {
    throw UsageError("cannot read " + path + ": " + e.what());
  }
  return cover_from_json(text);
}

GuestClass load_class(const std::string &name, const std::string &class_dir) {
  try {
    return registry_lookup(name, class_dir);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
}

json result_json(const SolveResult &r, const SolveBudget &b) {
  json out;
  out["decided"] = r.decided;
  out["value"] = r.decided ? json(r.value) : json(nullptr);
  out["lower"] = r.lower;
  out["upper"] = r.upper ? json(*r.upper) : json(nullptr);
  out["method"] = r.method;
  out["lower_bound_proof"] = r.lower_bound_proof;
  out["nodes"] = r.nodes;
  out["seconds"] = r.seconds;
  out["multiplicity_cap"] = r.multiplicity_cap;
  out["edge_repetition"] = r.edge_repetition;
  bool infeasible = !r.decided && r.lower_bound_proof.rfind("no cover exists", 0) == 0;
  json budget{{"nodes", b.node_limit}, {"seconds", b.time_limit}};
  if (!r.decided && !infeasible) budget["binding"] = r.nodes >= b.node_limit ? "nodes" : "seconds";
  out["budget"] = budget;
  out["certificate"] = r.certificate ? cover_json(*r.certificate) : json(nullptr);
  return out;
}

int result_code(const SolveResult &r) {
  if (r.decided) return ok;
  return r.lower_bound_proof.rfind("no cover exists", 0) == 0 ? invalid : undecided;
}

struct Options {
  std::string class_dir;
  std::string host, cls, variant = "global", cert, out, in, aux, family;
  std::uint64_t nodes = 10'000'000;
  double seconds = 60;
  int mult_cap = 0;
  std::string edge_rep = "auto";
  int param = 0;
  std::string digraph;
  std::string transform;
  bool chi = false, mad = false, tw = false, arb = false, planar = false;
};

SolveBudget budget_of(const Options &o) {
  SolveBudget b;
  b.node_limit = o.nodes;
  b.time_limit = o.seconds;
  b.multiplicity_cap = o.mult_cap;
  if (o.edge_rep == "on") b.edge_repetition = true;
  if (o.edge_rep == "off") b.edge_repetition = false;
  return b;
}

int run_compute(const Options &o) {
  auto v = parse_variant(o.variant);
  if (!v) throw UsageError("unknown variant " + o.variant);
  auto host = load_graph(o.host);
  auto cls = load_class(o.cls, o.class_dir);
  auto b = budget_of(o);
  auto r = solve(host, cls, *v, b);
  json out{{"command", "compute"}, {"host", graph_json(host)}, {"class", cls.name}, {"variant", variant_name(*v)}};
  out.update(result_json(r, b));
  return emit(out, result_code(r));
}

int run_chain(const Options &o) {
  auto host = load_graph(o.host);
  auto cls = load_class(o.cls, o.class_dir);
  auto b = budget_of(o);
  auto rep = chain_check(host, cls, b);
  json out{{"command", "chain"}, {"host", graph_json(host)}, {"class", cls.name}};
  bool all_decided = true;
  const std::pair<const char *, const SolveResult *> parts[] = {
      {"global", &rep.global}, {"union", &rep.union_}, {"local", &rep.local}, {"folded", &rep.folded}};
  for (auto [name, r] : parts) {
    json j = result_json(*r, b);
    j.erase("certificate");
    out[name] = j;
    all_decided = all_decided && r->decided;
  }
  out["holds"] = rep.holds;
  out["violations"] = rep.violations;
  if (!rep.holds) return emit(out, invalid);
  return emit(out, all_decided ? ok : undecided);
}

int run_verify(const Options &o) {
  Cover c;
  try {
    c = load_cover(o.cert);
  } catch (const ParseError &e) {
    std::cerr << "gulf: " << e.what() << "\n";
    return emit(json{{"command", "verify"}, {"valid", false}, {"first_violation", e.what()}}, invalid);
  }
  auto cls = load_class(o.cls.empty() ? c.claims.class_name : o.cls, o.class_dir);
  auto rep = verify_cover(c, cls);
  json out{{"command", "verify"},
           {"class", cls.name},
           {"valid", rep.valid},
           {"locality", rep.achieved_locality},
           {"globality", rep.achieved_globality},
           {"injective", rep.injective},
           {"guests", c.guests.size()},
           {"diagnostics", rep.diagnostics}};
  if (!rep.valid) {
    out["first_violation"] = rep.first_violation();
    std::cerr << "gulf: " << rep.first_violation() << "\n";
  }
  return emit(out, rep.valid ? ok : invalid);
}

int run_construct(const Options &o) {
  fs::create_directories(o.out);
  json files = json::array();
  auto write = [&](const std::string &name, const std::string &text) {
    auto path = (fs::path(o.out) / name).string();
    write_text_file(path, text);
    files.push_back(path);
  };
  auto write_cover = [&](const Cover &c) {
    write("cover.json", cover_to_json(c));
    write("host.g6", to_graph6(c.host) + "\n");
  };
  const int k = o.param;
  Cover cover;
  try {
    if (o.family == "tw-sep") {
      auto f = build_tw_family(k);
      write("H_" + std::to_string(k) + ".g6", to_graph6(f.host) + "\n");
      for (int i = 0; i < k; ++i) write("G_" + std::to_string(i + 1) + ".g6", to_graph6(f.guests[i]) + "\n");
      cover = f.cover;
      write("cover.json", cover_to_json(cover));
    } else if (o.family == "grid-sep") {
      auto f = build_grid_family(k);
      write("H_" + std::to_string(k) + ".g6", to_graph6(f.host) + "\n");
      for (int i = 0; i < k; ++i) write("G_" + std::to_string(i + 1) + ".g6", to_graph6(f.guests[i]) + "\n");
      cover = f.cover;
      write("cover.json", cover_to_json(cover));
    } else if (o.family == "hairy-star") {
      cover = build_hairy_star_cover(k);
      write_cover(cover);
    } else if (o.family == "shift") {
      DiGraph d = o.digraph.empty() ? complete_digraph(k) : parse_digraph(read_text_file(o.digraph));
      cover = shift_bipartite_local_cover(d);
      write("digraph.txt", to_digraph_text(d));
      write_cover(cover);
    } else if (o.family == "double-cover") {
      cover = bipartite_double_folded_cover(complete_graph(k));
      write_cover(cover);
    } else {
      throw UsageError("unknown family " + o.family);
    }
  } catch (const ConstructionError &e) {
    throw UsageError(e.what());
  }
  return emit(json{{"command", "construct"},
                   {"family", o.family},
                   {"param", k},
                   {"host", graph_json(cover.host)},
                   {"guests", cover.guests.size()},
                   {"locality", measured_locality(cover)},
                   {"globality", measured_globality(cover)},
                   {"injective", measured_injective(cover)},
                   {"files", files}},
              ok);
}

TreeDecomposition load_decomposition(const std::string &path) {
  json j = json::parse(read_text_file(path));
  TreeDecomposition td;
  auto bags = j.at("bags").get<std::vector<std::vector<int>>>();
  std::vector<Edge> es;
  for (auto &e : j.value("tree_edges", std::vector<std::vector<int>>{})) {
    if (e.size() != 2) throw UsageError("tree edge must be a pair");
    es.push_back(make_edge(e[0], e[1]));
  }
  for (auto &b : bags) std::sort(b.begin(), b.end());
  td.tree = Graph(static_cast<int>(bags.size()), es);
  td.bags = bags;
  return td;
}

std::vector<Cover> load_member_covers(const std::string &path) {
  json j = json::parse(read_text_file(path));
  std::vector<Cover> out;
  if (j.is_array())
    for (auto &c : j) out.push_back(cover_from_json(c.dump()));
  else
    out.push_back(cover_from_json(j.dump()));
  return out;
}

int run_transform(const Options &o) {
  Cover in = load_cover(o.in);
  auto cls = load_class(o.cls.empty() ? in.claims.class_name : o.cls, o.class_dir);
  TransformResult r;
  try {
    if (o.transform == "union-to-global") {
      r = union_to_global_compose(in, cls, o.aux.empty() ? std::vector<Cover>{} : load_member_covers(o.aux));
    } else if (o.transform == "local-to-union") {
      TreeDecomposition td = o.aux.empty() ? treewidth(in.host).decomposition : load_decomposition(o.aux);
      r = local_to_union_via_treewidth(in, cls, td);
    } else if (o.transform == "folded-to-union-bipartite") {
      r = folded_to_union_bipartite(in, cls);
    } else if (o.transform == "folded-to-local-star") {
      r = folded_to_local_star(in, cls);
    } else if (o.transform == "folded-to-union-sparse") {
      r = folded_to_union_sparse(in, cls);
    } else if (o.transform == "folded-to-union-chromatic") {
      r = folded_to_union_chromatic(in, cls);
    } else {
      throw UsageError("unknown transform " + o.transform);
    }
  } catch (const TransformError &e) {
    return fail(e.what(), invalid);
  }
  write_text_file(o.out, cover_to_json(r.cover));
  return emit(json{{"command", "transform"},
                   {"transform", o.transform},
                   {"class", cls.name},
                   {"bound", r.bound},
                   {"bound_text", r.bound_text},
                   {"guests", r.cover.guests.size()},
                   {"locality", measured_locality(r.cover)},
                   {"globality", measured_globality(r.cover)},
                   {"injective", measured_injective(r.cover)},
                   {"out", o.out}},
              ok);
}

int run_params(const Options &o) {
  auto g = load_graph(o.host);
  bool all = !(o.chi || o.mad || o.tw || o.arb || o.planar);
  json out{{"command", "params"}, {"host", graph_json(g)}};
  int code = ok;
  if (all || o.chi) {
    auto c = chromatic_number(g, o.nodes);
    out["chi"] = json{{"decided", c.decided}, {"value", c.decided ? json(c.value) : json(nullptr)},
                      {"lower", c.lower}, {"upper", c.upper}, {"coloring", c.coloring}};
    if (!c.decided) code = undecided;
  }
  if (all || o.mad) {
    auto m = mad(g);
    out["mad"] = json{{"value", m.value.str()}, {"witness", m.witness}};
  }
  if (all || o.tw) {
    auto t = treewidth(g);
    out["treewidth"] = json{{"value", t.width}, {"exact", t.exact}, {"bags", t.decomposition.bags}};
  }
  if (all || o.arb) out["arboricity"] = arboricity_nash_williams(g);
  if (all || o.planar) out["planar"] = is_planar(g);
  return emit(out, code);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Graph covers: compute, verify, construct and transform"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--class-dir", o.class_dir, "Directory of finite guest classes")->envname("GULF_CLASS_DIR");

  auto budget_flags = [&](CLI::App *sub) {
    sub->add_option("--budget-nodes", o.nodes, "Search node limit")->envname("GULF_BUDGET_NODES");
    sub->add_option("--budget-seconds", o.seconds, "Time limit in seconds")->envname("GULF_BUDGET_SECONDS");
    sub->add_option("--multiplicity-cap", o.mult_cap, "Preimages per host vertex in folded search (0: locality)")
        ->envname("GULF_MULTIPLICITY_CAP");
    sub->add_option("--edge-repetition", o.edge_rep, "Allow a host edge in several folded guests")
        ->check(CLI::IsMember({"auto", "on", "off"}))
        ->envname("GULF_EDGE_REPETITION");
  };

  auto *compute = app.add_subcommand("compute", "Covering number of a host");
  compute->add_option("host", o.host, "Host graph file")->required()->check(CLI::ExistingFile);
  compute->add_option("--class", o.cls, "Guest class")->required()->envname("GULF_CLASS");
  compute->add_option("--variant", o.variant, "global, union, local or folded")->envname("GULF_VARIANT");
  budget_flags(compute);

  auto *chain = app.add_subcommand("chain", "All four numbers and the inequality chain");
  chain->add_option("host", o.host, "Host graph file")->required()->check(CLI::ExistingFile);
  chain->add_option("--class", o.cls, "Guest class")->required()->envname("GULF_CLASS");
  budget_flags(chain);

  auto *verify = app.add_subcommand("verify", "Check a cover certificate");
  verify->add_option("certificate", o.cert, "Certificate JSON")->required()->check(CLI::ExistingFile);
  verify->add_option("--class", o.cls, "Override the class named in the certificate")->envname("GULF_CLASS");

  auto *construct = app.add_subcommand("construct", "Write a family from the constructions");
  construct->add_option("family", o.family, "tw-sep, grid-sep, hairy-star, shift or double-cover")
      ->required()
      ->check(CLI::IsMember({"tw-sep", "grid-sep", "hairy-star", "shift", "double-cover"}));
  construct->add_option("--param", o.param, "Family parameter")->envname("GULF_PARAM");
  construct->add_option("--digraph", o.digraph, "Digraph edge list for shift")
      ->check(CLI::ExistingFile)
      ->envname("GULF_DIGRAPH");
  construct->add_option("--out", o.out, "Output directory")->required()->envname("GULF_OUT");

  auto *transform = app.add_subcommand("transform", "Turn one cover into another");
  transform
      ->add_option("name", o.transform,
                   "union-to-global, local-to-union, folded-to-union-bipartite, folded-to-local-star, "
                   "folded-to-union-sparse or folded-to-union-chromatic")
      ->required();
  transform->add_option("--in", o.in, "Input certificate")->required()->check(CLI::ExistingFile)->envname("GULF_IN");
  transform->add_option("--aux", o.aux, "Member covers or tree decomposition (JSON)")
      ->check(CLI::ExistingFile)
      ->envname("GULF_AUX");
  transform->add_option("--out", o.out, "Output certificate")->required()->envname("GULF_OUT");
  transform->add_option("--class", o.cls, "Override the class named in the certificate")->envname("GULF_CLASS");

  auto *params = app.add_subcommand("params", "Graph parameters");
  params->add_option("host", o.host, "Host graph file")->required()->check(CLI::ExistingFile);
  params->add_flag("--chi", o.chi, "Chromatic number")->envname("GULF_CHI");
  params->add_flag("--mad", o.mad, "Maximum average degree")->envname("GULF_MAD");
  params->add_flag("--tw", o.tw, "Treewidth")->envname("GULF_TW");
  params->add_flag("--arboricity", o.arb, "Arboricity")->envname("GULF_ARBORICITY");
  params->add_flag("--planar", o.planar, "Planarity")->envname("GULF_PLANAR");
  params->add_option("--budget-nodes", o.nodes, "Node limit for the chromatic search")->envname("GULF_BUDGET_NODES");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    return fail(e.what(), usage);
  }

  try {
    if (*compute) return run_compute(o);
    if (*chain) return run_chain(o);
    if (*verify) return run_verify(o);
    if (*construct) return run_construct(o);
    if (*transform) return run_transform(o);
    if (*params) return run_params(o);
  } catch (const UsageError &e) {
    return fail(e.what(), usage);
  } catch (const UnsupportedClass &e) {
    return fail(e.what(), usage);
  } catch (const ParseError &e) {
    return fail(e.what(), usage);
  } catch (const nlohmann::json::exception &e) {
    return fail(std::string("bad JSON: ") + e.what(), usage);
  } catch (const std::exception &e) {
    return fail(e.what(), usage);
  }
  return usage;
}
