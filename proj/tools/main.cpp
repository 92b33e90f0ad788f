// cyclo-cli: batch front end. Every document goes to --out or stdout.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "cyclo/errors.hpp"
#include "json_io.hpp"
#include "selftest.hpp"

using namespace cyclo;

namespace {

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

Residue parse_residue(const std::string& text) {
  // "value" or "value@class"
  const auto at = text.find('@');
  Residue z;
  z.value = to_long(parse_rational(text.substr(0, at)));
  if (at != std::string::npos) z.class_id = static_cast<int>(to_long(parse_rational(text.substr(at + 1))));
  return z;
}

WallDescriptor parse_wall(const std::string& text) {
  const auto v = parse_list(text);
  if (v.size() != 3) throw InputError("--wall expects i,j,m");
  return WallDescriptor::charge_wall(static_cast<int>(to_long(v[0])), static_cast<int>(to_long(v[1])),
                                     to_long(v[2]));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of category O for G(l,1,n)"};
  app.require_subcommand(1);

  std::string params_file, out_file, format = "json";
  bool strict_ties = false;
  app.add_option("--params", params_file, "parameter JSON file");
  app.add_option("--out", out_file, "write the document here instead of stdout");
  app.add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  app.add_flag("--strict-ties", strict_ties, "treat tied c-values as an error");

  int n_max = 4, n = 2;
  auto* crystal = app.add_subcommand("crystal", "crystal graph up to a size bound");
  crystal->add_option("--n-max", n_max, "largest size")->required();

  auto* supp = app.add_subcommand("support", "support table of P_l(n)");
  supp->add_option("-n,--n", n, "size")->required();

  auto* fock = app.add_subcommand("fock", "Fock space computations");
  fock->require_subcommand(1);
  cli::FockMatrixRequest req;
  std::string residue_text;
  int class_id = -1;
  auto* matrix = fock->add_subcommand("matrix", "operator matrix between two degrees");
  matrix->add_option("--op", req.op, "f, e, bplus or bminus")->required();
  matrix->add_option("--from", req.from, "source degree")->required();
  matrix->add_option("--residue", residue_text, "residue as value or value@class");
  matrix->add_option("--d", req.d, "Heisenberg index");
  matrix->add_option("--class", class_id, "restrict B to one class");
  int degree = 0;
  auto* singular = fock->add_subcommand("singular", "singular subspace in one degree");
  singular->add_option("--degree", degree)->required();
  auto* filtr = fock->add_subcommand("filtration", "filtration dimensions in one degree");
  filtr->add_option("--degree", degree)->required();

  auto* params_cmd = app.add_subcommand("params", "walls, classes and Hecke exponents");
  params_cmd->add_option("-n,--n", n, "rank")->required();

  std::string wall_text, direction = "lower";
  auto* wallcross = app.add_subcommand("wallcross", "wall-crossing bijection on P_l(n)");
  wallcross->add_option("--wall", wall_text, "i,j,m")->required();
  wallcross->add_option("--direction", direction)->check(CLI::IsMember({"lower", "raise"}));
  wallcross->add_option("-n,--n", n, "size")->required();

  int level = 1, k = 0, j = 0;
  std::string h_text;
  auto* rank1 = app.add_subcommand("rank1", "Hom between rank-one standard modules");
  rank1->add_option("--level", level)->required();
  rank1->add_option("--h-values", h_text, "comma separated h_0,...,h_{l-1}")->required();
  rank1->add_option("--k", k)->required();
  rank1->add_option("--j", j)->required();

  std::string depth = "quick";
  auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
  selftest->add_option("depth", depth)->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int rc = app.exit(ex);
    return rc == 0 ? 0 : cli::kInputError;
  }

  std::string doc;
  try {
    if (selftest->parsed()) {
      std::ostringstream report;
      const bool ok = cli::run_selftest(depth == "full" ? cli::SelftestDepth::full
                                                       : cli::SelftestDepth::quick,
                                        report);
      std::cout << report.str();
      return ok ? 0 : 1;
    }
    if (rank1->parsed()) {
      doc = cli::cmd_rank1(level, parse_list(h_text), k, j);
    } else {
      if (params_file.empty()) throw InputError("--params is required");
      const CherednikParams p = io::load_params(params_file);
      if (format == "dot" && !crystal->parsed()) throw InputError("dot output exists only for crystal");
      if (crystal->parsed()) {
        doc = cli::cmd_crystal(p, n_max, format == "dot" ? cli::Format::dot : cli::Format::json,
                               strict_ties ? TiePolicy::strict : TiePolicy::by_component);
      } else if (supp->parsed()) {
        doc = cli::cmd_support(p, n);
      } else if (matrix->parsed()) {
        if (!residue_text.empty()) req.z = parse_residue(residue_text);
        if (class_id >= 0) req.class_id = class_id;
        doc = cli::cmd_fock_matrix(p, req);
      } else if (singular->parsed()) {
        doc = cli::cmd_fock_singular(p, degree);
      } else if (filtr->parsed()) {
        doc = cli::cmd_fock_filtration(p, degree);
      } else if (params_cmd->parsed()) {
        doc = cli::cmd_params(p, n);
      } else if (wallcross->parsed()) {
        doc = cli::cmd_wallcross(p, parse_wall(wall_text),
                                 direction == "lower" ? WallCrossStep::Direction::lower
                                                      : WallCrossStep::Direction::raise,
                                 n);
      }
    }
  } catch (...) {
    std::string message;
    const int rc = cli::exit_code_for_current_exception(message);
    std::cerr << "error: " << message << "\n";
    return rc;
  }

  if (out_file.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(out_file);
    if (!out) {
      std::cerr << "error: cannot write " << out_file << "\n";
      return cli::kInputError;
    }
    out << doc;
  }
  return 0;
}
