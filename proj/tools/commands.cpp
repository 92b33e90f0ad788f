// commands.cpp
#include "commands.hpp"

#include "cyclo/errors.hpp"
#include "cyclo/fock.hpp"
#include "json_io.hpp"

namespace cyclo::cli {

using io::json;
using io::to_json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string label(const Multipartition& m) { return to_string(m); }

}  // namespace

std::string cmd_crystal(const CherednikParams& p, int n_max, Format fmt, TiePolicy ties) {
  if (n_max < 0) throw InputError("n_max must be nonnegative");
  const CrystalGraph g = crystal_graph(p.level(), n_max, p);
  if (ties == TiePolicy::strict) {
    // same order as the default, but any tie aborts
    for (const auto& lambda : g.nodes) {
      for (const Residue& z : addable_residues(lambda, p)) z_signature(lambda, z, p, ties);
    }
  }
  if (fmt == Format::dot) return to_dot(g, p);

  DepthMemo memo;
  json nodes = json::array();
  for (const auto& lambda : g.nodes) {
    const int depth = km_depth(lambda, p, &memo);
    nodes.push_back({{"lambda", to_json(lambda)}, {"depth", depth}, {"singular", depth == 0}});
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"from", to_json(e.from)}, {"residue", to_json(e.z)}, {"to", to_json(e.to)}});
  }
  json comps = json::array();
  for (const auto& c : components(g)) {
    json members = json::array();
    for (const auto& lambda : c) members.push_back(to_json(lambda));
    comps.push_back(members);
  }
  return dump({{"params", to_json(p)},
               {"n_max", n_max},
               {"nodes", nodes},
               {"edges", edges},
               {"components", comps}});
}

std::string cmd_support(const CherednikParams& p, int n) {
  if (n < 0) throw InputError("n must be nonnegative");
  if (!p.kappa().is_rational()) throw UnsupportedParameter("support tables need a rational kappa");
  json rows = json::array();
  for (const auto& lambda : enumerate_multipartitions(p.level(), n)) {
    json row = to_json(support(lambda, p));
    row["lambda"] = to_json(lambda);
    rows.push_back(row);
  }
  return dump(rows);
}

std::string cmd_fock_matrix(const CherednikParams& p, const FockMatrixRequest& req) {
  if (req.from < 0) throw InputError("degree must be nonnegative");
  const long e = p.e().value_or(0);
  int to = req.from;
  if (req.op == "f") {
    to = req.from + 1;
  } else if (req.op == "e") {
    to = req.from - 1;
  } else if (req.op == "bplus" || req.op == "bminus") {
    if (e == 0) throw UnsupportedParameter("Heisenberg operators need a rational kappa");
    if (req.d < 1) throw InputError("--d must be positive");
    to = req.op == "bplus" ? req.from + req.d * static_cast<int>(e)
                           : req.from - req.d * static_cast<int>(e);
  } else {
    throw InputError("unknown operator " + req.op + " (expected f, e, bplus, bminus)");
  }
  if ((req.op == "f" || req.op == "e") && !req.z) throw InputError("--residue is required");
  const int bound = std::max(req.from, to);
  OperatorMatrix m;
  if (to < 0) {
    m.degree_from = req.from;
    m.degree_to = to;
    m.col_labels = enumerate_multipartitions(p.level(), req.from);
  } else {
    m = operator_matrix(p.level(), req.from, to, bound, [&](const FockVector& v) {
      if (req.op == "f") return f_z_op(v, *req.z, p);
      if (req.op == "e") return e_z_op(v, *req.z, p);
      if (req.op == "bplus") return b_plus_op(v, req.d, p, HeisenbergModel::ribbon, req.class_id);
      return b_minus_op(v, req.d, p, HeisenbergModel::ribbon, req.class_id);
    });
  }
  json rows = json::array(), cols = json::array(), entries = json::array();
  for (const auto& l : m.row_labels) rows.push_back(label(l));
  for (const auto& l : m.col_labels) cols.push_back(label(l));
  for (const auto& [r, c, x] : m.entries) entries.push_back({r, c, to_string(x)});
  return dump({{"operator", req.op},
               {"degree_from", m.degree_from},
               {"degree_to", m.degree_to},
               {"rows", {rows, cols}},
               {"entries", entries}});
}

std::string cmd_fock_singular(const CherednikParams& p, int n) {
  const auto basis = singular_subspace(n, p);
  json vectors = json::array();
  for (const auto& v : basis) {
    json terms = json::array();
    for (const auto& [l, c] : v.entries()) terms.push_back({label(l), to_string(c)});
    vectors.push_back(terms);
  }
  return dump({{"degree", n}, {"dimension", basis.size()}, {"basis", vectors}});
}

std::string cmd_fock_filtration(const CherednikParams& p, int n) {
  if (n < 0) throw InputError("degree must be nonnegative");
  std::vector<SupportDescriptor> sd;
  for (const auto& lambda : enumerate_multipartitions(p.level(), n)) sd.push_back(support(lambda, p));
  json rows = json::array();
  for (int p0 = 0; p0 <= n; ++p0) {
    for (int q0 = 0; q0 <= n; ++q0) {
      long count = 0;
      for (const auto& s : sd) count += s.p <= p0 && s.q <= q0;
      rows.push_back({{"p", p0}, {"q", q0}, {"dim", filtration_dim(p0, q0, n, p)}, {"crystal_count", count}});
    }
  }
  return dump({{"degree", n}, {"rows", rows}});
}

std::string cmd_params(const CherednikParams& p, int n) {
  json out;
  out["params"] = to_json(p);
  json h = json::array();
  for (int i = 0; i < p.level(); ++i)
    h.push_back(p.kappa().is_rational() ? to_string(p.evaluate(p.h(i))) : to_string(p.h(i)));
  out["h"] = h;
  out["e"] = p.e() ? json(*p.e()) : json("infinity");
  out["classes"] = equivalence_classes(p);
  json walls = json::array();
  for (const auto& w : essential_walls(p, n)) walls.push_back(to_json(w));
  out["walls"] = walls;
  if (p.kappa().is_rational()) {
    const HeckeExponents he = hecke_exponents(p);
    json Q = json::array();
    for (const auto& x : he.Q_exp) Q.push_back(to_string(x));
    out["hecke"] = {{"q_exp", to_string(he.q_exp)}, {"Q_exp", Q}};
  } else {
    out["hecke"] = nullptr;
  }
  return dump(out);
}

std::string cmd_wallcross(const CherednikParams& p, const WallDescriptor& wall,
                          WallCrossStep::Direction dir, int n) {
  if (n < 0) throw InputError("n must be nonnegative");
  const WallCrossStep step{wall, dir};
  json pairs = json::array();
  for (const auto& lambda : enumerate_multipartitions(p.level(), n)) {
    pairs.push_back({{"from", to_json(lambda)}, {"to", to_json(wall_cross(lambda, step, p))}});
  }
  return dump({{"wall", to_json(wall)},
               {"direction", dir == WallCrossStep::Direction::lower ? "lower" : "raise"},
               {"n", n},
               {"bijection", pairs}});
}

std::string cmd_rank1(int level, const std::vector<Rational>& h, int k, int j) {
  const VermaHom v = rank_one_verma_hom(level, h, k, j);
  return dump({{"dim", v.dim}, {"n", v.witness ? json(*v.witness) : json(nullptr)}});
}

int exit_code_for_current_exception(std::string& message) {
  try {
    throw;
  } catch (const AmbiguityError& ex) {
    message = ex.what();
    return kAmbiguity;
  } catch (const TruncationError& ex) {
    message = ex.what();
    return kTruncation;
  } catch (const InputError& ex) {
    message = ex.what();
    return kInputError;
  } catch (const UnsupportedParameter& ex) {
    message = ex.what();
    return kInputError;
  } catch (const PreconditionError& ex) {
    message = ex.what();
    return kInputError;
  } catch (const InvalidMove& ex) {
    message = ex.what();
    return kInputError;
  } catch (const io::json::exception& ex) {
    message = ex.what();
    return kInputError;
  } catch (const std::exception& ex) {
    message = ex.what();
    return 1;
  }
}

}  // namespace cyclo::cli
