#include "korbit/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "korbit/bruhat.hpp"
#include "korbit/error.hpp"
#include "korbit/geometry.hpp"
#include "korbit/orbit_graph.hpp"
#include "korbit/smoothness.hpp"

namespace korbit::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw IoError("failed writing " + path);
}

std::string weight_text(const Weight& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w[k]);
  }
  return s + ")";
}

int cmd_slice(const Involution& pi, std::ostream& out) {
  if (pi.size() % 2 != 0) {
    throw Error(ErrorKind::SizeMismatch, "slice requires even m, got m=" + std::to_string(pi.size()));
  }
  if (pi.size() > kMaxSliceM) {
    throw Error(ErrorKind::TooLarge, "slice is limited to m <= " + std::to_string(kMaxSliceM));
  }
  const int n = half_size(pi);
  const SliceVariables vars(n);
  const auto& names = vars.names();

  out << "slice of " << format_perm(pi) << " (n=" << n << ")\n";
  const int r = rank(pi);
  const int deg = w0_degree(pi);
  out << "r=" << r << " codim=" << codim(pi) << " deg_w0=" << deg
      << (deg == r ? "" : "  (degree condition fails; minors shown for reference)") << "\n";

  out << "gram matrix:\n";
  const PolyMatrix gram = slice_gram(n);
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (const auto& row : gram) {
    auto& line = cells.emplace_back();
    for (const auto& p : row) {
      line.push_back(p.to_string(names));
      width = std::max(width, line.back().size());
    }
  }
  for (const auto& line : cells) {
    out << " ";
    for (const auto& c : line) out << " " << std::string(width - c.size(), ' ') << c;
    out << "\n";
  }
  const auto mismatches = gram_diagnostic(n);
  out << "gram table vs basis products: "
      << (mismatches.empty() ? "agree" : std::to_string(mismatches.size()) + " entries differ") << "\n";
  for (const auto& mm : mismatches) {
    out << "  (" << mm.i << "," << mm.j << ") table " << mm.table.to_string(names) << " product "
        << mm.product.to_string(names) << "\n";
  }

  std::map<SliceVariable, Involution> vertex_of;
  for (const Involution& v : neighbors(w0(2 * n)).neighbors) vertex_of.emplace(neighbor_variable(v, n), v);
  out << "variables:\n";
  for (const auto& v : vars.vars()) {
    out << "  " << variable_name(v) << "  weight " << weight_text(variable_weight(v, n)) << "  vertex "
        << format_perm(vertex_of.at(v)) << "\n";
  }
  out << "attractive fixed point: " << (attractiveness_check(n) ? "yes" : "no") << "\n";

  const auto ideal = slice_ideal(pi, n);
  out << "slice ideal (" << ideal.size() << " generators):\n";
  for (const auto& gen : ideal) {
    out << "  [" << format_perm(gen.excluded) << "] " << gen.poly.to_string(names) << "\n";
  }
  out << "monomial claim:\n";
  for (const auto& gen : ideal) {
    const Polynomial p = minor_condition_ii(pi, gen.excluded, n);
    out << "  [" << format_perm(gen.excluded) << "] " << variable_name(neighbor_variable(gen.excluded, n))
        << " in " << p.to_string(names) << ": "
        << (monomial_claim(pi, gen.excluded, n) ? "holds" : "fails") << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smoothness of O(m)-orbit closures on the flag variety of GL(m)", "korbit"};
  app.require_subcommand(1);

  std::string perm_text;
  std::string format = "text";
  auto* classify_cmd = app.add_subcommand("classify", "Classify the orbit closure of an involution");
  classify_cmd->add_option("perm", perm_text, "Involution in one-line notation")->required();
  classify_cmd->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  int sweep_m = 0;
  std::string out_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Classify every involution of S_m");
  sweep_cmd->add_option("--m", sweep_m, "Size m")->required()->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--out", out_path, "Write structured records to this file");

  auto* verify_cmd = app.add_subcommand("verify-paper", "Re-run the singularity case analysis");

  std::string dot_path;
  auto* graph_cmd = app.add_subcommand("graph", "Write the interval graph in DOT");
  graph_cmd->add_option("perm", perm_text, "Involution in one-line notation")->required();
  graph_cmd->add_option("--dot", dot_path, "Output file (default stdout)");

  auto* slice_cmd = app.add_subcommand("slice", "Show the slice at the closed orbit (even m)");
  slice_cmd->add_option("perm", perm_text, "Involution in one-line notation")->required();

  std::string flag_path;
  auto* flag_cmd = app.add_subcommand("orbit-of-flag", "Identify the orbit of a flag");
  flag_cmd->add_option("file", flag_path, "Flag matrix file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*classify_cmd) {
      const auto rep = classify(parse_involution(perm_text));
      out << (format == "structured" ? format_report_record(rep) + "\n" : format_report_text(rep));
      return kExitOk;
    }
    if (*sweep_cmd) {
      const SweepReport rep = sweep(sweep_m);
      out << format_sweep_text(rep);
      if (!out_path.empty()) write_file(out_path, format_sweep_records(rep));
      return rep.coherent() ? kExitOk : kExitIncoherent;
    }
    if (*verify_cmd) {
      const auto res = verify_paper_cases();
      out << format_paper_checks(res);
      return res.all_pass() ? kExitOk : kExitFailure;
    }
    if (*graph_cmd) {
      const std::string dot = export_dot(interval(parse_involution(perm_text)));
      if (dot_path.empty()) {
        out << dot;
      } else {
        write_file(dot_path, dot);
      }
      return kExitOk;
    }
    if (*slice_cmd) return cmd_slice(parse_involution(perm_text), out);
    if (*flag_cmd) {
      std::ifstream f(flag_path);
      if (!f) {
        err << "error: cannot read " << flag_path << "\n";
        return kExitMalformed;
      }
      out << format_perm(orbit_of_flag(FlagMatrix::parse(f))) << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::TooLarge ? kExitTooLarge : kExitMalformed;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace korbit::cli
