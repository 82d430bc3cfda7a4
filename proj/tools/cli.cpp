#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "disorient/generators.hpp"
#include "disorient/io.hpp"
#include "disorient/report.hpp"
#include "disorient/splitting.hpp"

namespace disorient::cli {

namespace {

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    io::write_text(path, text);
  }
}

std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disorientability analysis and repair for simplicial complexes", "disorient"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;

  auto* check = app.add_subcommand("check", "Decide disorientability; exit 0 if disorientable, 1 if not");
  io::CheckOptions check_options;
  check->add_option("input", input, "Complex document, or - for standard input")->required();
  check->add_flag("--certificate", check_options.certificate, "Include the disorientation or obstruction cycle");
  check->add_flag("--oracle", check_options.oracle, "Cross-check with exhaustive search (small inputs)");
  check->add_option("--out", out_path, "Write the report here instead of standard output");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Laplacian eigenvalues");
  std::optional<int> spec_dim;
  std::string kind_name = "full";
  bool normalized = false;
  bool csv = false;
  spectrum_cmd->add_option("input", input, "Complex document, or -")->required();
  spectrum_cmd->add_option("--dim", spec_dim, "Dimension (default: all)");
  spectrum_cmd->add_option("--kind", kind_name, "full, up or down")->check(CLI::IsMember({"full", "up", "down"}));
  spectrum_cmd->add_flag("--normalized", normalized, "Normalized graph Laplacian (graphs, dimension 0)");
  spectrum_cmd->add_flag("--csv", csv, "Emit dimension,index,eigenvalue rows");
  spectrum_cmd->add_option("--out", out_path, "Output path");

  auto* dual = app.add_subcommand("dual", "Up/down dual graph listing");
  io::DualRequest dual_request;
  bool down = false, up = false;
  dual->add_option("input", input, "Complex document, or -")->required();
  dual->add_option("--dim", dual_request.dim, "Dimension of the dual's vertices")->required();
  auto* down_flag = dual->add_flag("--down", down, "Adjacency through shared faces (default)");
  dual->add_flag("--up", up, "Adjacency through shared cofaces")->excludes(down_flag);
  dual->add_flag("--signed", dual_request.signed_edges, "Coherence signs w (top down-dual)");
  dual->add_flag("--cycles", dual_request.cycles, "Append the classified fundamental cycles");
  dual->add_option("--out", out_path, "Output path");

  auto* split = app.add_subcommand("split", "Subdivide until disorientable; exit 3 at the iteration cap");
  std::optional<std::size_t> max_iter;
  split->add_option("input", input, "Complex document, or -")->required();
  split->add_option("--max-iter", max_iter, "Iteration cap (default 10 x top simplices)")->check(CLI::PositiveNumber);
  split->add_option("--out", out_path, "Write the repaired complex document here");

  auto* gen = app.add_subcommand("generate", "Write an example complex document");
  std::string gen_name;
  generators::GeneratorParams params;
  gen->add_option("name", gen_name, "Generator name")->required()->check(CLI::IsMember(generators::names()));
  gen->add_option("--n", params.n, "Size parameter n");
  gen->add_option("--m", params.m, "Size parameter m (torus, klein_bottle)");
  gen->add_option("--k", params.k, "Triangle count (triangle_strip)");
  gen->add_option("--pages", params.pages, "Page count (book)");
  gen->add_flag("--closed", params.closed, "Close the strip");
  gen->add_flag("--twisted", params.twisted, "Close with a half turn");
  gen->add_option("--out", out_path, "Output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*gen) {
      auto k = io::with_default_labels(generators::generate(gen_name, params));
      emit(dump(io::write_complex(k)), out_path, out);
      return 0;
    }

    const auto doc = io::parse_complex(io::read_text(input));

    if (*check) {
      if (doc.complex.dimension() < 1) throw std::invalid_argument("check needs a complex of dimension >= 1");
      auto report = io::check_report(doc, check_options);
      if (report.contains("oracle") && report["oracle"].value("ran", false) && !report["oracle"]["agrees"].get<bool>()) {
        err << "disorient: brute-force oracle disagrees with sign propagation\n";
        emit(dump(report), out_path, out);
        return kError;
      }
      emit(dump(report), out_path, out);
      return report["disorientable"].get<bool>() ? kDisorientable : kNotDisorientable;
    }

    if (*spectrum_cmd) {
      io::SpectrumRequest request{spec_dim, normalized ? LaplacianKind::normalized_graph
                                                       : laplacian_kind_from_string(kind_name)};
      auto report = io::spectrum_report(doc, request);
      emit(csv ? io::spectrum_rows(report) : dump(report), out_path, out);
      return 0;
    }

    if (*dual) {
      dual_request.adjacency = up ? Adjacency::up : Adjacency::down;
      emit(dump(io::dual_report(doc, dual_request)), out_path, out);
      return 0;
    }

    if (*split) {
      if (doc.complex.dimension() < 1) throw std::invalid_argument("split needs a complex of dimension >= 1");
      io::Json report;
      const auto betti_before = betti_numbers(doc.complex);
      report["betti_before"] = betti_before;
      try {
        auto result = make_disorientable(doc.complex, max_iter);
        auto repaired = io::relabel_after_split(doc, std::move(result.complex));
        const auto betti_after = betti_numbers(repaired.complex);
        report["disorientable"] = true;
        report["split_log"] = io::split_log_json(repaired, result.log);
        report["betti_after"] = betti_after;
        report["topology_preserved"] = betti_before == betti_after;
        report["brute_force_agrees"] =
            repaired.complex.top_count() > kBruteForceCap
                ? io::Json(nullptr)
                : io::Json(brute_force_disorientable(repaired.complex).disorientable());
        auto document = io::write_complex(repaired);
        if (out_path.empty()) {
          report["complex"] = std::move(document);
        } else {
          io::write_text(out_path, dump(document));
          report["written_to"] = out_path;
        }
        out << dump(report);
        return 0;
      } catch (const IterationCapExceeded& e) {
        auto partial = io::relabel_after_split(doc, e.partial());
        report["disorientable"] = false;
        report["split_log"] = io::split_log_json(partial, e.log());
        report["error"] = e.what();
        out << dump(report);
        err << "disorient: " << e.what() << "\n";
        return kIterationCap;
      }
    }
  } catch (const std::exception& e) {
    err << "disorient: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace disorient::cli
