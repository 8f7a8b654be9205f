// Command-line front end: generators, recognizers, solvers, constructions and
// certificate verification over the text formats of the library.
//
// Every command prints `key: value` lines first. Exit status: 0 success,
// 1 infeasible or invalid, 2 bad input, 3 budget exhausted.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covering/constructions.hpp"
#include "covering/cover.hpp"
#include "covering/gadgets.hpp"
#include "covering/graph.hpp"
#include "covering/orientations.hpp"
#include "covering/report.hpp"
#include "covering/solvers.hpp"
#include "covering/templates.hpp"

using namespace covering;

namespace {

enum Exit { ok = 0, negative = 1, bad_input = 2, budget = 3 };

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Fn>
auto read_file(const std::string& path, Fn&& parse) {
  if (path == "-") return parse(std::cin);
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open " + path);
  return parse(in);
}

template <class Fn>
void write_file(const std::string& path, Fn&& emit) {
  if (path.empty()) return;
  if (path == "-") {
    emit(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw BadInput("cannot write " + path);
  emit(out);
}

Graph load_graph(const std::string& path) {
  return read_file(path, [](std::istream& in) { return read_graph(in); });
}

void save_certificate(const std::string& path, const CoverCertificate& cert) {
  write_file(path, [&](std::ostream& out) { write_certificate(out, cert); });
}

void kv(const std::string& key, const std::string& value) { std::cout << key << ": " << value << "\n"; }
void kv(const std::string& key, long long value) { kv(key, std::to_string(value)); }

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

// Solver flags shared by solve and pack.
struct SolverFlags {
  std::string graph, cls, mode = "global", out;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  Budget budget() const { return Budget{nodes, seconds}; }
};

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
  cmd->add_option("-g,--graph", f.graph, "host graph file, - for stdin")->required();
  cmd->add_option("--class", f.cls, "template class")->required();
  cmd->add_option("--mode", f.mode, "global, local or folded");
  cmd->add_option("--nodes", f.nodes, "search node budget, 0 for none");
  cmd->add_option("--seconds", f.seconds, "time budget in seconds, 0 for none");
  cmd->add_option("-o,--out", f.out, "certificate output file");
}

int report_result(const SolveResult& r, const std::string& key) {
  kv("status", std::string(status_name(r.status)));
  if (r.value) kv(key, *r.value);
  kv("nodes", static_cast<long long>(r.nodes_explored));
  switch (r.status) {
    case SolveStatus::feasible: return ok;
    case SolveStatus::unknown:
      std::cout << "\nThe search budget ran out before the value was settled.\n";
      return budget;
    case SolveStatus::infinite:
      std::cout << "\nSome edge lies in no member of the class, so no cover exists at any size.\n";
      return negative;
    case SolveStatus::infeasible:
      std::cout << "\nThe search space was exhausted without finding a cover within the bound.\n";
      return negative;
  }
  return negative;
}

// bounds for constrained folded solves: role=value pairs matched against vertex labels
std::vector<int> role_bounds(const Graph& g, const std::vector<std::string>& specs, int fallback) {
  std::map<std::string, int> by_role;
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw BadInput("bound must look like role=value: " + s);
    by_role[s.substr(0, eq)] = std::stoi(s.substr(eq + 1));
  }
  std::vector<int> bounds(g.vertex_count(), fallback);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (auto it = by_role.find(role_of(g.label(v))); it != by_role.end()) bounds[v] = it->second;
  return bounds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covering: exact and constructive graph covering numbers"};
  app.require_subcommand(1);
  int status = ok;
  std::function<void()> action;

  // gen
  std::string gen_family, gen_gadget, gen_out = "-", gen_sequence_out;
  std::vector<int> gen_params;
  int gen_k = 0, gen_core = 0, gen_random_n = 0, gen_limit = default_gadget_vertex_limit;
  double gen_p = 0.5;
  std::uint32_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "write a family member, gadget or random graph");
  gen->add_option("--family", gen_family, "path, cycle, complete, complete_bipartite, star, petersen, spider, hypercube");
  gen->add_option("--param", gen_params, "family parameters");
  gen->add_option("--gadget", gen_gadget, "t_deg, i_tw, t_stw or fca");
  gen->add_option("--k", gen_k, "gadget parameter");
  gen->add_option("--core", gen_core, "with --gadget fca: index of the 10-vertex core instead of the whole gadget");
  gen->add_option("--limit", gen_limit, "largest gadget to build");
  gen->add_option("--random", gen_random_n, "random graph on this many vertices");
  gen->add_option("--p", gen_p, "edge probability for --random");
  gen->add_option("--seed", gen_seed, "seed for --random");
  gen->add_option("-o,--out", gen_out, "graph output file");
  gen->add_option("--sequence-out", gen_sequence_out, "write the gadget's construction sequence");
  gen->callback([&] {
    action = [&] {
      Graph g;
      const int chosen = !gen_family.empty() + !gen_gadget.empty() + (gen_random_n > 0);
      if (chosen != 1) throw BadInput("give exactly one of --family, --gadget, --random");
      if (!gen_family.empty()) {
        g = generate(gen_family, gen_params);
        kv("family", gen_family);
      } else if (gen_random_n > 0) {
        std::mt19937 rng(gen_seed);
        std::bernoulli_distribution coin(gen_p);
        std::vector<Edge> e;
        for (Vertex a = 0; a < gen_random_n; ++a)
          for (Vertex b = a + 1; b < gen_random_n; ++b)
            if (coin(rng)) e.push_back({a, b});
        g = Graph(gen_random_n, e);
        kv("seed", gen_seed);
      } else {
        const auto kind = parse_gadget(gen_gadget);
        kv("gadget", gen_gadget);
        if (gen_core > 0) {
          if (kind != GadgetKind::fca) throw BadInput("--core only applies to fca");
          g = fca_core(gen_k, gen_core);
        } else {
          const auto gd = gadget(kind, gen_k, gen_limit);
          g = gd.graph;
          if (gd.sequence) write_file(gen_sequence_out, [&](std::ostream& out) { write_sequence(out, *gd.sequence); });
          else if (!gen_sequence_out.empty()) throw BadInput("gadget " + gen_gadget + " has no sequence");
          for (const auto& note : gd.notes) std::cerr << "note: " << note << "\n";
        }
      }
      kv("vertices", g.vertex_count());
      kv("edges", g.edge_count());
      if (gen_out == "-") std::cout << "\n";
      write_file(gen_out, [&](std::ostream& out) { write_graph(out, g); });
    };
  });

  // recognize
  std::string rec_graph, rec_class;
  auto* rec = app.add_subcommand("recognize", "test class membership");
  rec->add_option("-g,--graph", rec_graph, "graph file")->required();
  rec->add_option("--class", rec_class, "only this class");
  rec->callback([&] {
    action = [&] {
      const Graph g = load_graph(rec_graph);
      if (!rec_class.empty()) {
        const bool member = recognize(parse_class(rec_class), g);
        kv(rec_class, member ? "yes" : "no");
        status = member ? ok : negative;
        return;
      }
      for (ClassTag t : all_classes) kv(std::string(class_name(t)), recognize(t, g) ? "yes" : "no");
    };
  });

  // solve
  SolverFlags sf;
  int solve_k = -1, solve_default_bound = 1;
  std::vector<std::string> solve_bounds;
  auto* solve = app.add_subcommand("solve", "exact covering number with a certificate");
  add_solver_flags(solve, sf);
  solve->add_option("--k", solve_k, "decide this value instead of minimizing");
  solve->add_option("--bound", solve_bounds, "folded copy bound per label role, e.g. c=1 (repeatable)");
  solve->add_option("--default-bound", solve_default_bound, "bound for vertices no --bound matches");
  solve->callback([&] {
    action = [&] {
      const Graph g = load_graph(sf.graph);
      const auto cls = parse_class(sf.cls);
      const auto mode = parse_mode(sf.mode);
      kv("class", sf.cls);
      kv("mode", sf.mode);
      SolveResult r;
      if (!solve_bounds.empty()) {
        if (mode != CoverMode::folded) throw BadInput("--bound needs --mode folded");
        r = decide_constrained_folded(g, cls, role_bounds(g, solve_bounds, solve_default_bound), sf.budget());
      } else if (solve_k >= 0) {
        r = decide(g, cls, mode, solve_k, sf.budget());
      } else {
        r = compute_number(g, cls, mode, sf.budget());
      }
      status = report_result(r, "value");
      if (r.certificate) save_certificate(sf.out, *r.certificate);
    };
  });

  // verify
  std::string ver_graph, ver_cert, ver_class, ver_mode = "global";
  auto* ver = app.add_subcommand("verify", "check a cover certificate");
  ver->add_option("-g,--graph", ver_graph, "host graph file")->required();
  ver->add_option("-c,--certificate", ver_cert, "certificate file")->required();
  ver->add_option("--class", ver_class, "template class")->required();
  ver->add_option("--mode", ver_mode, "global, local or folded");
  ver->callback([&] {
    action = [&] {
      const Graph g = load_graph(ver_graph);
      const auto cert = read_file(ver_cert, [&](std::istream& in) { return read_certificate(in, g.vertex_count()); });
      const auto r = verify_cover(g, cert, parse_class(ver_class), parse_mode(ver_mode));
      kv("valid", r.valid ? "true" : "false");
      kv("size", r.size);
      kv("max_preimage", r.max_preimage);
      kv("injective", r.injective ? "true" : "false");
      kv("covered_edges", r.covered_edge_count);
      for (const auto& v : r.violations) kv("violation", v);
      status = r.valid ? ok : negative;
    };
  });

  // orient
  std::string ori_graph, ori_out;
  int ori_bound = -1;
  auto* ori = app.add_subcommand("orient", "minimum max-outdegree orientation, or test a uniform bound");
  ori->add_option("-g,--graph", ori_graph, "graph file")->required();
  ori->add_option("--bound", ori_bound, "test out-degree <= bound at every vertex");
  ori->add_option("-o,--out", ori_out, "orientation output file");
  ori->callback([&] {
    action = [&] {
      const Graph g = load_graph(ori_graph);
      if (ori_bound >= 0) {
        const auto r = orient_bounded(g, std::vector<int>(g.vertex_count(), ori_bound));
        kv("feasible", r.orientation ? "true" : "false");
        if (!r.orientation) {
          kv("violating_set", join(r.violating_set));
          kv("induced_edges", count_induced_edges(g, r.violating_set));
          status = negative;
          return;
        }
        write_file(ori_out, [&](std::ostream& out) { write_orientation(out, g, *r.orientation); });
        return;
      }
      const auto p = pseudoarboricity(g);
      kv("pseudoarboricity", p.value);
      kv("witness", join(p.witness.subset));
      write_file(ori_out, [&](std::ostream& out) { write_orientation(out, g, p.orientation); });
    };
  });

  // arbor
  std::string arb_graph;
  auto* arb = app.add_subcommand("arbor", "arboricity, pseudoarboricity and degeneracy");
  arb->add_option("-g,--graph", arb_graph, "graph file")->required();
  arb->callback([&] {
    action = [&] {
      const Graph g = load_graph(arb_graph);
      const auto a = arboricity(g);
      kv("arboricity", a.value);
      kv("arboricity_witness", join(a.witness.subset));
      kv("pseudoarboricity", pseudoarboricity(g).value);
      kv("degeneracy", degeneracy(g).value);
    };
  });

  // lsa
  std::string lsa_graph, lsa_out, lsa_orientation;
  auto* lsa = app.add_subcommand("lsa", "local star arboricity with a star forest certificate");
  lsa->add_option("-g,--graph", lsa_graph, "graph file")->required();
  lsa->add_option("-o,--out", lsa_out, "certificate output file");
  lsa->add_option("--orientation-out", lsa_orientation, "orientation behind the certificate");
  lsa->callback([&] {
    action = [&] {
      const Graph g = load_graph(lsa_graph);
      const auto r = local_star_arboricity(g);
      kv("local_star_arboricity", r.value);
      kv("pseudoarboricity", r.pseudoarboricity);
      save_certificate(lsa_out, r.certificate);
      write_file(lsa_orientation, [&](std::ostream& out) { write_orientation(out, g, r.orientation); });
    };
  });

  // flac
  std::string flac_graph, flac_out;
  auto* flac = app.add_subcommand("flac", "folded linear forest cover from Euler tours");
  flac->add_option("-g,--graph", flac_graph, "graph file")->required();
  flac->add_option("-o,--out", flac_out, "certificate output file");
  flac->callback([&] {
    action = [&] {
      const Graph g = load_graph(flac_graph);
      const auto cert = flac_cover(g);
      kv("components", cert.size());
      kv("max_preimage", verify_cover(g, cert, ClassTag::linear_forest, CoverMode::folded).max_preimage);
      kv("max_degree", g.max_degree());
      save_certificate(flac_out, cert);
    };
  });

  // slug
  std::string slug_graph, slug_seq, slug_out;
  auto* slug = app.add_subcommand("slug", "injective interval cover of a partial simple k-tree");
  slug->add_option("-g,--graph", slug_graph, "graph file")->required();
  slug->add_option("-s,--sequence", slug_seq, "construction sequence file")->required();
  slug->add_option("-o,--out", slug_out, "certificate output file");
  slug->callback([&] {
    action = [&] {
      const Graph g = load_graph(slug_graph);
      const auto seq = read_file(slug_seq, [](std::istream& in) { return read_sequence(in); });
      const auto cert = slug_cover(g, seq);
      kv("width", seq.width);
      kv("components", cert.size());
      kv("max_preimage", verify_cover(g, cert, ClassTag::interval, CoverMode::local).max_preimage);
      save_certificate(slug_out, cert);
    };
  });

  // lift
  std::string lift_seq, lift_out = "-", lift_graph_out;
  auto* lift = app.add_subcommand("lift", "embed a k-tree sequence into a simple (k+1)-tree sequence");
  lift->add_option("-s,--sequence", lift_seq, "construction sequence file")->required();
  lift->add_option("-o,--out", lift_out, "lifted sequence output file");
  lift->add_option("--graph-out", lift_graph_out, "graph realized by the lifted sequence");
  lift->callback([&] {
    action = [&] {
      const auto seq = read_file(lift_seq, [](std::istream& in) { return read_sequence(in); });
      const auto check = validate_sequence(seq, false);
      if (!check.ok) throw BadInput("sequence: " + check.violations.front());
      const auto lifted = lift_to_simple(seq);
      const auto after = validate_sequence(lifted, true);
      kv("input_simple", validate_sequence(seq, true).ok ? "true" : "false");
      kv("width", lifted.width);
      kv("vertices", lifted.vertex_count());
      kv("simple", after.ok ? "true" : "false");
      if (lift_out == "-") std::cout << "\n";
      write_file(lift_out, [&](std::ostream& out) { write_sequence(out, lifted); });
      write_file(lift_graph_out, [&](std::ostream& out) { write_graph(out, after.graph); });
    };
  });

  // krausz
  std::string kr_graph, kr_out, kr_line_out;
  auto* kr = app.add_subcommand("krausz", "clique cover of the line graph by the stars of a graph");
  kr->add_option("-g,--graph", kr_graph, "preimage graph file")->required();
  kr->add_option("-o,--out", kr_out, "certificate output file (over the line graph)");
  kr->add_option("--line-graph-out", kr_line_out, "line graph output file");
  kr->callback([&] {
    action = [&] {
      const Graph h = load_graph(kr_graph);
      const auto lg = line_graph(h);
      const auto cert = krausz_cover(h);
      kv("line_graph_vertices", lg.graph.vertex_count());
      kv("cliques", cert.size());
      kv("max_preimage", verify_cover(lg.graph, cert, ClassTag::clique_collection, CoverMode::local).max_preimage);
      save_certificate(kr_out, cert);
      write_file(kr_line_out, [&](std::ostream& out) { write_graph(out, lg.graph); });
    };
  });

  // contacts
  std::string ct_graph, ct_rep, ct_out;
  auto* ct = app.add_subcommand("contacts", "star forests from a segment contact representation");
  ct->add_option("-g,--graph", ct_graph, "graph file")->required();
  ct->add_option("-r,--representation", ct_rep, "contact representation file")->required();
  ct->add_option("-o,--out", ct_out, "certificate output file");
  ct->callback([&] {
    action = [&] {
      const Graph g = load_graph(ct_graph);
      const auto rep = read_file(ct_rep, [](std::istream& in) { return read_contacts(in); });
      const auto problems = contact_violations(g, rep);
      if (!problems.empty()) {
        kv("valid", "false");
        for (const auto& p : problems) kv("violation", p);
        status = negative;
        return;
      }
      const auto cert = contact_star_forests(g, rep);
      kv("valid", "true");
      kv("star_forests", cert.size());
      save_certificate(ct_out, cert);
    };
  });

  // pack
  SolverFlags pf;
  auto* pack = app.add_subcommand("pack", "packing number by brute force");
  add_solver_flags(pack, pf);
  pack->callback([&] {
    action = [&] {
      const Graph g = load_graph(pf.graph);
      kv("class", pf.cls);
      kv("mode", pf.mode);
      const auto r = compute_packing(g, parse_class(pf.cls), parse_mode(pf.mode), pf.budget());
      status = report_result(r, "value");
      if (r.certificate) save_certificate(pf.out, *r.certificate);
    };
  });

  // report
  ReportOptions ro;
  std::vector<int> rep_checks;
  auto* rep = app.add_subcommand("report", "desk-scale reproduction checks, one PASS/FAIL line each");
  rep->add_option("--seed", ro.seed, "seed for the random corpora");
  rep->add_option("--check", rep_checks, "run only these checks (1-11)");
  rep->add_option("--corpus-nodes", ro.corpus_node_budget, "per-solve node budget in the corpus check");
  rep->callback([&] {
    action = [&] {
      if (rep_checks.empty())
        for (int i = 1; i <= report::check_count; ++i) rep_checks.push_back(i);
      kv("seed", ro.seed);
      int failed = 0;
      std::vector<std::string> lines;
      for (int id : rep_checks) {
        const auto o = report::run_check(id, ro);
        failed += !o.pass;
        lines.push_back(report::format_outcome(o));
      }
      kv("checks", static_cast<long long>(rep_checks.size()));
      kv("failed", failed);
      std::cout << "\n";
      for (const auto& l : lines) std::cout << l << "\n";
      status = failed ? negative : ok;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }
  try {
    action();
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  }
  std::cout.flush();
  return status;
}
