// polymux command line: construct face lattices of multiplexes and ordinary
// polytopes, verify the structural properties of the families, run the
// f-vector spanning check, diff lattice documents, and export graphs.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polymux/polymux.hpp"

namespace {

using namespace polymux;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

PolytopeSpec spec_from_flags(const std::string& kind, int d, int k, int n) {
  PolytopeSpec spec;
  spec.kind = parse_kind(kind);
  spec.d = d;
  spec.k = k;
  spec.n = n;
  if (spec.kind == Kind::Polygon) spec.d = 2;
  if (spec.kind == Kind::Simplex) spec.n = spec.d;
  validate_spec(spec);
  return spec;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::vector<std::string> split_checks(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial face lattices of multiplexes and ordinary polytopes"};
  app.require_subcommand(1);

  std::string kind = "multiplex";
  int d = 0, k = 0, n = 0;
  std::string format = "json";
  std::string out_path;
  std::string checks_csv = "all";
  bool grid_all = false;
  std::string path_a, path_b;

  CLI::App* construct = app.add_subcommand("construct", "build a face lattice document");
  construct->add_option("--kind", kind, "multiplex|ordinary|polygon|pyramid|simplex")->required();
  construct->add_option("-d", d, "dimension");
  construct->add_option("-k", k, "characteristic (ordinary)");
  construct->add_option("-n", n, "largest vertex index");
  construct->add_option("--format", format, "json|appendix")->check(CLI::IsMember({"json", "appendix"}));
  construct->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "check family properties against enumeration");
  verify->add_option("--kind", kind, "multiplex|ordinary|polygon|pyramid|simplex");
  verify->add_option("-d", d, "dimension");
  verify->add_option("-k", k, "characteristic (ordinary)");
  verify->add_option("-n", n, "largest vertex index");
  verify->add_option("--checks", checks_csv, "comma list or 'all'");
  verify->add_flag("--all", grid_all, "run the default parameter grids");
  verify->add_option("--out", out_path, "write the JSON report here");

  CLI::App* conjecture = app.add_subcommand("conjecture", "f-vector spanning slice for odd d");
  conjecture->add_option("-d", d, "odd dimension, 5..9")->required();

  CLI::App* compare = app.add_subcommand("compare", "diff two lattice documents");
  compare->add_option("a", path_a, "first document (json or appendix text)")->required();
  compare->add_option("b", path_b, "second document")->required();

  CLI::App* graph = app.add_subcommand("graph", "DOT export of the polytope graph");
  graph->add_option("--kind", kind, "multiplex|ordinary|polygon|simplex")->required();
  graph->add_option("-d", d, "dimension");
  graph->add_option("-k", k, "characteristic (ordinary)");
  graph->add_option("-n", n, "largest vertex index");
  graph->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (construct->parsed()) {
      PolytopeSpec spec = spec_from_flags(kind, d, k, n);
      FaceLattice L = build_polytope(spec);
      LatticeDocument doc = make_document(spec, L);
      if (format == "appendix") {
        write_output(out_path, to_appendix_text(doc));
      } else {
        write_output(out_path, document_to_json_text(doc));
      }
      return 0;
    }

    if (verify->parsed()) {
      std::vector<std::string> checks = split_checks(checks_csv);
      VerificationReport rep;
      if (grid_all) {
        rep = run_default_grids(checks, default_face_budget());
      } else {
        PolytopeSpec spec = spec_from_flags(kind, d, k, n);
        rep = run_checks(spec, checks);
      }
      rep.print(std::cout);
      if (rep.skipped_cells > 0)
        std::cout << "(skipped " << rep.skipped_cells << " cells over the face budget)\n";
      if (!out_path.empty()) write_output(out_path, rep.to_json().dump(2) + "\n");
      return rep.all_pass() ? 0 : kExitFail;
    }

    if (conjecture->parsed()) {
      ConjectureReport rep = conjecture_report(d);
      for (size_t i = 0; i < rep.specs.size(); ++i) {
        std::cout << rep.specs[i].to_string() << "  f=(";
        for (size_t j = 0; j < rep.f_vectors[i].size(); ++j)
          std::cout << (j ? "," : "") << rep.f_vectors[i][j];
        std::cout << ")\n";
      }
      std::cout << "euler: " << (rep.euler_ok ? "ok" : "violated") << "\n";
      std::cout << "rank: " << rep.rank << " of " << rep.d << "\n";
      if (!rep.pass()) {
        std::cerr << "rank deficient\n";
        return kExitFail;
      }
      return 0;
    }

    if (compare->parsed()) {
      LatticeDocument a = load_document(path_a);
      LatticeDocument b = load_document(path_b);
      DiffReport diff = compare_documents(a, b);
      std::cout << diff.to_string();
      return diff.empty() ? 0 : kExitFail;
    }

    if (graph->parsed()) {
      PolytopeSpec spec = spec_from_flags(kind, d, k, n);
      PolytopeGraph g;
      switch (spec.kind) {
        case Kind::Multiplex: g = multiplex_edges(spec.d, spec.n); break;
        case Kind::Simplex: g = multiplex_edges(spec.d, spec.d); break;
        case Kind::Ordinary: g = ordinary_edges(spec.k, spec.n); break;
        case Kind::Polygon: g = band_graph(2, spec.n); break;
        case Kind::Pyramid: throw BadParams("no direct edge description for pyramids");
      }
      write_output(out_path, to_dot(g));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BadParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AppendixFormatUnavailable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
