// crystal.hpp - the Kac-Moody crystal on l-multipartitions (sl_e-hat for
// rational kappa with denominator e, sl_infinity for irrational kappa) via
// the signature rule.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/params.hpp"
#include "cyclo/partition.hpp"

namespace cyclo {

// Tie handling for equal c-values inside one signature. With valid
// parameters boxes of one residue never tie, so this only matters for
// hand-built entry lists.
enum class TiePolicy { by_component, strict };

struct SignatureEntry {
  Box box;
  char sign = '+';  // '+' addable, '-' removable
  CValue c;
};

struct Signature {
  Residue residue;
  std::vector<SignatureEntry> entries;

  std::string word() const;
};

// Sorts entries by ascending c_b; equal c-values are ordered by component
// index, or rejected with AmbiguityError under TiePolicy::strict.
void order_entries(std::vector<SignatureEntry>& entries, const CherednikParams& p,
                   TiePolicy ties = TiePolicy::by_component);

Signature z_signature(const Multipartition& lambda, const Residue& z, const CherednikParams& p,
                      TiePolicy ties = TiePolicy::by_component);

// Cancels "-+" pairs (possibly separated by cancelled entries) until every
// '+' precedes every '-'.
Signature reduce_signature(const Signature& sig);

std::optional<Multipartition> e_tilde(const Multipartition& lambda, const Residue& z,
                                      const CherednikParams& p,
                                      TiePolicy ties = TiePolicy::by_component);
std::optional<Multipartition> f_tilde(const Multipartition& lambda, const Residue& z,
                                      const CherednikParams& p,
                                      TiePolicy ties = TiePolicy::by_component);

// Residues of the addable (resp. removable) boxes of lambda, sorted.
std::vector<Residue> addable_residues(const Multipartition& lambda, const CherednikParams& p);
std::vector<Residue> removable_residues(const Multipartition& lambda, const CherednikParams& p);

// e~_z(lambda) == 0 for every z.
bool is_singular(const Multipartition& lambda, const CherednikParams& p);

// Longest nonvanishing e~-word. The memo may be shared between calls with
// the same parameters.
using DepthMemo = std::map<Multipartition, int>;
int km_depth(const Multipartition& lambda, const CherednikParams& p, DepthMemo* memo = nullptr);

// A path of e~ operators from lambda down to a singular vertex; residues are
// listed in the order they were applied.
struct HighestWeightPath {
  Multipartition top;
  std::vector<Residue> lowering;
};
HighestWeightPath path_to_singular(const Multipartition& lambda, const CherednikParams& p);

struct CrystalEdge {
  Multipartition from;
  Residue z;
  Multipartition to;  // to = f~_z(from)
};

struct CrystalGraph {
  std::vector<Multipartition> nodes;  // canonical order
  std::vector<CrystalEdge> edges;     // sorted by (from, z)
};

CrystalGraph crystal_component(const Multipartition& lambda, const CherednikParams& p,
                               int size_bound);
CrystalGraph crystal_graph(int level, int n_max, const CherednikParams& p);

// Connected components of a graph, each as a sorted list of nodes; the
// components are ordered by their least node.
std::vector<std::vector<Multipartition>> components(const CrystalGraph& g);

// DOT text: node label = JSON multipartition, edge label = residue. Singular
// vertices are drawn as boxes and every node carries its depth.
std::string to_dot(const CrystalGraph& g, const CherednikParams& p);

}  // namespace cyclo
