// splines: minimum generating sets, GKM checks and dimension certificates.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "splines/io.hpp"
#include "splines/mgs_general.hpp"

using namespace splines;

namespace {

std::string tuple(const std::vector<int>& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + std::to_string(seq[i]);
  return out + ")";
}

std::string row_text(const Spline& s) {
  std::string out = "(";
  for (std::size_t v = 0; v < s.entries().size(); ++v) out += (v ? ", " : "") + s.at(v).to_string();
  return out + ")";
}

int run_mgs(const std::string& graph_path, const std::string& out_path) {
  const auto g = io::graph_from_json(io::read_file(graph_path));
  const auto b = mgs_dispatch(g);
  std::cout << "vertices: ";
  for (std::size_t v = 0; v < g->vertex_count(); ++v) std::cout << (v ? " " : "") << g->id(v);
  std::cout << "\ngenerators: " << b.size() << "\n";
  for (std::size_t i = 0; i < b.size(); ++i) std::cout << "  b" << i + 1 << " = " << row_text(b[i]) << "\n";
  std::cout << "degree sequence: " << tuple(degree_sequence(b)) << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << io::generating_set_to_json(b).dump(2) << "\n";
  }
  return 0;
}

int run_verify(const std::string& graph_path, const std::string& spline_path) {
  const auto g = io::graph_from_json(io::read_file(graph_path));
  const auto result = verify_gkm(g, io::entries_from_json(*g, io::read_file(spline_path)));
  if (result.ok()) {
    std::cout << "PASS\n";
    return 0;
  }
  std::cout << "FAIL\n";
  for (const auto& v : result.violations)
    std::cout << "  edge " << v.u << "-" << v.v << ": " << v.difference.to_string() << " not divisible by "
              << v.label.to_string() << "\n";
  return 1;
}

int run_certify(const std::string& graph_path, const std::string& set_path, int dmax) {
  const auto g = io::graph_from_json(io::read_file(graph_path));
  const auto b = io::generating_set_from_json(g, io::read_file(set_path));
  const auto rows = certify_basis(b, dmax);
  std::cout << "degree predicted actual span_rank result\n";
  for (const auto& r : rows)
    std::cout << r.degree << " " << r.predicted << " " << r.actual << " " << r.span_rank << " "
              << (r.pass ? "PASS" : "FAIL") << "\n";
  const bool ok = all_pass(rows);
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int run_pinwheel(const std::string& path, int dmax) {
  const auto p = io::pinwheel_from_json(io::read_file(path));
  const auto report = pinwheel_full_pipeline(p, dmax);
  std::cout << "rays: " << report.n << (report.singular ? " (singular)" : "") << "\n";
  std::cout << "degree sequence: " << tuple(report.degree_sequence) << "\n";
  std::cout << "degree predicted formula oracle result\n";
  for (const auto& r : report.rows)
    std::cout << r.degree << " " << r.predicted << " " << r.formula << " " << r.oracle << " "
              << (r.pass ? "PASS" : "FAIL") << "\n";
  std::cout << (report.pass() ? "PASS" : "FAIL") << "\n";
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized splines on edge-labeled graphs"};
  app.require_subcommand(1);

  std::string graph_path, second_path, out_path;
  int dmax = 6;
  int n = 0, labels = 0;

  auto* mgs = app.add_subcommand("mgs", "Minimum generating set of a graph");
  mgs->add_option("graph", graph_path, "graph JSON")->required();
  mgs->add_option("--out", out_path, "write the generating set as JSON");

  auto* verify = app.add_subcommand("verify", "Check the GKM condition for a vertex labeling");
  verify->add_option("graph", graph_path, "graph JSON")->required();
  verify->add_option("spline", second_path, "spline JSON")->required();

  auto* certify = app.add_subcommand("certify", "Compare a generating set with brute-force dimensions");
  certify->add_option("graph", graph_path, "graph JSON")->required();
  certify->add_option("set", second_path, "generating set JSON")->required();
  certify->add_option("--dmax", dmax, "highest degree checked")->check(CLI::NonNegativeNumber);

  auto* pinwheel = app.add_subcommand("pinwheel", "C^1 dimensions of a pinwheel triangulation");
  pinwheel->add_option("pinwheel", graph_path, "pinwheel JSON")->required();
  pinwheel->add_option("--dmax", dmax, "highest degree checked")->check(CLI::NonNegativeNumber);

  auto* degseq = app.add_subcommand("degseq", "Degree sequence of a quadratic-label cycle");
  degseq->add_option("n", n, "cycle length")->required();
  degseq->add_option("labels", labels, "number of distinct labels")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*mgs) return run_mgs(graph_path, out_path);
    if (*verify) return run_verify(graph_path, second_path);
    if (*certify) return run_certify(graph_path, second_path, dmax);
    if (*pinwheel) return run_pinwheel(graph_path, dmax);
    if (*degseq) {
      std::cout << tuple(predicted_degree_sequence(n, labels)) << "\n";
      return 0;
    }
  } catch (const UnsupportedInput& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
