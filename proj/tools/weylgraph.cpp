// weylgraph: build, reconstruct, analyse and verify Weyl-distance graphs.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "weyl/autgroup.hpp"
#include "weyl/error.hpp"
#include "weyl/family.hpp"
#include "weyl/graph_io.hpp"
#include "weyl/reconstruct.hpp"
#include "weyl/suites.hpp"

using namespace weyl;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2, kRejected = 3, kBudget = 4;

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidSpec:
    case ErrorKind::PreconditionViolation:
    case ErrorKind::UnsupportedSpec:
    case ErrorKind::UnsupportedOrder: return kUsage;
    case ErrorKind::SearchBudgetExceeded:
    case ErrorKind::TooLarge: return kBudget;
    default: return kRejected;
  }
}

GraphFile load(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  return read_graph_file(path);
}

// writes to `path`, or stdout for "-"
template <class F>
void emit(const std::string& path, F&& body) {
  if (path == "-") {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  body(out);
}

struct BuildArgs {
  std::string geom = "thick", mode = "exact", out = "-";
  int q = 2, n = 0, i = 0, j = 0, k = 0;
  bool simple = false;
};

int cmd_build(const BuildArgs& a) {
  FamilySpec s;
  if (a.geom == "thick") s = thick(a.q, a.n, a.i, a.j, a.k);
  else if (a.geom == "thin") s = thin(a.n, a.i, a.j, a.k);
  else throw Error(ErrorKind::InvalidSpec, "geometry must be thick or thin");
  if (a.mode == "at-least") s.mode = Mode::AtLeast;
  else if (a.mode != "exact") throw Error(ErrorKind::InvalidSpec, "mode must be exact or at-least");
  s.validate();

  if (a.simple) {
    const SimpleGraph G = build_simple(s);
    emit(a.out, [&](std::ostream& os) { write_graph(os, G, s); });
    std::cerr << s.to_string() << ": " << G.size() << " vertices, valence " << (G.size() ? G.degree(0) : 0) << "\n";
    return kOk;
  }
  const BiGraph G = build_bigraph(s);
  emit(a.out, [&](std::ostream& os) { write_graph(os, G, s); });
  auto v = [](std::optional<std::size_t> x) { return x ? std::to_string(*x) : std::string("irregular"); };
  std::cerr << s.to_string() << ": " << G.size_a() << "x" << G.size_b() << ", bivalence "
            << v(G.valence(Side::A)) << "," << v(G.valence(Side::B)) << ", edges " << G.edge_count() << "\n";
  return kOk;
}

int cmd_reconstruct(const std::string& in, const std::string& out, std::uint64_t seed) {
  const GraphFile f = load(in);
  ReconstructionReport r;
  try {
    r = f.bipartite() ? reconstruct(std::get<BiGraph>(f.graph), seed) : reconstruct(std::get<SimpleGraph>(f.graph), seed);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    std::cerr << e.what() << "\n";
    return exit_code(e) == kUsage ? kRejected : exit_code(e);
  }
  emit(out, [&](std::ostream& os) { os << r.to_json() << "\n"; });
  return kOk;
}

int cmd_aut(const std::string& in, bool show_gens) {
  const GraphFile f = load(in);
  const PermGroup A = f.bipartite() ? automorphisms(std::get<BiGraph>(f.graph))
                                    : automorphisms(std::get<SimpleGraph>(f.graph));
  std::cout << "order " << to_string(A.order()) << "\n";
  std::cout << "generators " << A.generators().size() << "\n";
  if (show_gens)
    for (const auto& g : A.generators()) {
      for (std::size_t x = 0; x < g.size(); ++x) std::cout << (x ? " " : "") << g[x];
      std::cout << "\n";
    }
  return kOk;
}

int cmd_verify(const std::vector<std::string>& names, SuiteOptions opt) {
  std::vector<std::string> run = names;
  if (run.size() == 1 && run[0] == "all") run = suite_names();
  bool all_ok = true;
  for (const auto& name : run) {
    std::cout << "# suite " << name << " seed " << opt.seed << "\n";
    opt.on_check = [](const CheckResult& c) {
      std::cout << "CHECK " << c.name << " " << c.expected << " " << c.observed << " " << to_string(c.status) << std::endl;
    };
    const SuiteResult r = run_suite(name, opt);
    std::ostringstream secs;
    secs.precision(2);
    secs << std::fixed << r.seconds;
    std::cout << "SUITE " << name << " " << (r.passed() ? "PASS" : "FAIL") << " checks=" << r.checks.size()
              << " failed=" << r.count(CheckStatus::Fail) << " skipped=" << r.count(CheckStatus::Skip)
              << " seconds=" << secs.str() << "\n";
    all_ok = all_ok && r.passed();
  }
  return all_ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build and analyse Weyl-distance bipartite graphs of projective spaces and finite sets"};
  app.require_subcommand(1);
  int threads = 1;
  std::uint64_t seed = SuiteOptions{}.seed;
  app.add_option("--threads", threads, "worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for randomized steps");

  BuildArgs b;
  auto* build = app.add_subcommand("build", "write a family graph");
  build->add_option("--geom", b.geom, "thick or thin")->required();
  build->add_option("--q", b.q, "field order (thick)");
  build->add_option("--n", b.n, "projective dimension or ground set size")->required();
  build->add_option("--i", b.i)->required();
  build->add_option("--j", b.j)->required();
  build->add_option("--k", b.k)->required();
  build->add_option("--mode", b.mode, "exact or at-least");
  build->add_flag("--simple", b.simple, "graph on the j-part (WSG1)");
  build->add_option("-o,--output", b.out, "output file, - for stdout");

  std::string in = "-", out = "-";
  auto* rec = app.add_subcommand("reconstruct", "recover family parameters from a graph file");
  rec->add_option("input", in, "WBG1/WSG1 file, - for stdin");
  rec->add_option("-o,--output", out, "report file, - for stdout");

  bool gens = false;
  std::size_t cap = aut_vertex_cap();
  auto* aut = app.add_subcommand("aut", "automorphism group order");
  aut->add_option("input", in, "WBG1/WSG1 file, - for stdin");
  aut->add_flag("--generators", gens, "print the generators");
  aut->add_option("--cap", cap, "largest vertex count searched");

  std::vector<std::string> suites;
  SuiteOptions opt;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suites, "suite names or 'all'")->required();
  ver->add_option("--samples", opt.random_samples, "random triples/quadruples per graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  for (const auto& s : suites)
    if (s != "all" && std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      std::cerr << "unknown suite '" << s << "'\n";
      return kUsage;
    }

  set_threads(threads);
  opt.seed = seed;
  try {
    if (*build) return cmd_build(b);
    if (*rec) return cmd_reconstruct(in, out, seed);
    if (*aut) {
      set_aut_vertex_cap(cap);
      return cmd_aut(in, gens);
    }
    if (*ver) return cmd_verify(suites, opt);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
