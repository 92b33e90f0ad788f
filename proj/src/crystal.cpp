// crystal.cpp
#include "cyclo/crystal.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "cyclo/errors.hpp"

namespace cyclo {

std::string Signature::word() const {
  std::string out;
  for (const auto& e : entries) out += e.sign;
  return out;
}

namespace {

std::string describe(const Box& b) {
  return "(" + std::to_string(b.x) + "," + std::to_string(b.y) + "," + std::to_string(b.comp) + ")";
}

// Sign of c1 - c2; the difference must be an exact integer.
int compare_c(const CValue& c1, const CValue& c2, const CherednikParams& p) {
  auto d = p.integral_value(c1 - c2);
  if (!d) throw Error("c-values " + to_string(c1) + " and " + to_string(c2) + " are incomparable");
  return sgn(*d);
}

}  // namespace

void order_entries(std::vector<SignatureEntry>& entries, const CherednikParams& p, TiePolicy ties) {
  std::stable_sort(entries.begin(), entries.end(),
                   [&](const SignatureEntry& a, const SignatureEntry& b) {
                     int c = compare_c(a.c, b.c, p);
                     if (c != 0) return c < 0;
                     return a.box.comp < b.box.comp;
                   });
  if (ties == TiePolicy::strict) {
    for (std::size_t i = 1; i < entries.size(); ++i) {
      if (compare_c(entries[i - 1].c, entries[i].c, p) == 0)
        throw AmbiguityError("tied c-values for boxes " + describe(entries[i - 1].box) + " and " +
                             describe(entries[i].box));
    }
  }
}

Signature z_signature(const Multipartition& lambda, const Residue& z, const CherednikParams& p,
                      TiePolicy ties) {
  Signature sig{z, {}};
  for (const Box& b : addable_boxes(lambda)) {
    if (residue(b, p) == z) sig.entries.push_back({b, '+', c_of_box(b, p)});
  }
  for (const Box& b : removable_boxes(lambda)) {
    if (residue(b, p) == z) sig.entries.push_back({b, '-', c_of_box(b, p)});
  }
  order_entries(sig.entries, p, ties);
  return sig;
}

Signature reduce_signature(const Signature& sig) {
  std::vector<char> alive(sig.entries.size(), 1);
  std::vector<std::size_t> open_minus;
  for (std::size_t i = 0; i < sig.entries.size(); ++i) {
    if (sig.entries[i].sign == '-') {
      open_minus.push_back(i);
    } else if (!open_minus.empty()) {
      alive[open_minus.back()] = 0;
      alive[i] = 0;
      open_minus.pop_back();
    }
  }
  Signature out{sig.residue, {}};
  for (std::size_t i = 0; i < sig.entries.size(); ++i) {
    if (alive[i]) out.entries.push_back(sig.entries[i]);
  }
  return out;
}

std::optional<Multipartition> e_tilde(const Multipartition& lambda, const Residue& z,
                                      const CherednikParams& p, TiePolicy ties) {
  const Signature red = reduce_signature(z_signature(lambda, z, p, ties));
  for (const auto& e : red.entries) {
    if (e.sign == '-') return remove_box(lambda, e.box);
  }
  return std::nullopt;
}

std::optional<Multipartition> f_tilde(const Multipartition& lambda, const Residue& z,
                                      const CherednikParams& p, TiePolicy ties) {
  const Signature red = reduce_signature(z_signature(lambda, z, p, ties));
  for (auto it = red.entries.rbegin(); it != red.entries.rend(); ++it) {
    if (it->sign == '+') return add_box(lambda, it->box);
  }
  return std::nullopt;
}

namespace {

std::vector<Residue> residues_of(const std::vector<Box>& bs, const CherednikParams& p) {
  std::set<Residue> out;
  for (const Box& b : bs) out.insert(residue(b, p));
  return {out.begin(), out.end()};
}

// sl_e-hat with e = 1 is the zero algebra: no crystal operators at all.
bool trivial_algebra(const CherednikParams& p) { return p.e() && *p.e() == 1; }

}  // namespace

std::vector<Residue> addable_residues(const Multipartition& lambda, const CherednikParams& p) {
  if (trivial_algebra(p)) return {};
  return residues_of(addable_boxes(lambda), p);
}

std::vector<Residue> removable_residues(const Multipartition& lambda, const CherednikParams& p) {
  if (trivial_algebra(p)) return {};
  return residues_of(removable_boxes(lambda), p);
}

bool is_singular(const Multipartition& lambda, const CherednikParams& p) {
  for (const Residue& z : removable_residues(lambda, p)) {
    if (e_tilde(lambda, z, p)) return false;
  }
  return true;
}

int km_depth(const Multipartition& lambda, const CherednikParams& p, DepthMemo* memo) {
  DepthMemo local;
  DepthMemo& cache = memo ? *memo : local;
  if (auto it = cache.find(lambda); it != cache.end()) return it->second;
  int best = 0;
  for (const Residue& z : removable_residues(lambda, p)) {
    if (auto mu = e_tilde(lambda, z, p)) best = std::max(best, 1 + km_depth(*mu, p, &cache));
  }
  cache.emplace(lambda, best);
  return best;
}

HighestWeightPath path_to_singular(const Multipartition& lambda, const CherednikParams& p) {
  HighestWeightPath path{lambda, {}};
  bool moved = true;
  while (moved) {
    moved = false;
    for (const Residue& z : removable_residues(path.top, p)) {
      if (auto mu = e_tilde(path.top, z, p)) {
        path.top = *mu;
        path.lowering.push_back(z);
        moved = true;
        break;
      }
    }
  }
  return path;
}

namespace {

void sort_graph(CrystalGraph& g) {
  std::sort(g.nodes.begin(), g.nodes.end());
  g.nodes.erase(std::unique(g.nodes.begin(), g.nodes.end()), g.nodes.end());
  std::sort(g.edges.begin(), g.edges.end(), [](const CrystalEdge& a, const CrystalEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    return a.z < b.z;
  });
}

}  // namespace

CrystalGraph crystal_component(const Multipartition& lambda, const CherednikParams& p,
                               int size_bound) {
  if (size_bound < lambda.size()) throw InputError("size bound below |lambda|");
  std::set<Multipartition> seen{lambda};
  std::deque<Multipartition> queue{lambda};
  CrystalGraph g;
  while (!queue.empty()) {
    Multipartition cur = queue.front();
    queue.pop_front();
    g.nodes.push_back(cur);
    if (cur.size() < size_bound) {
      for (const Residue& z : addable_residues(cur, p)) {
        if (auto mu = f_tilde(cur, z, p)) {
          g.edges.push_back({cur, z, *mu});
          if (seen.insert(*mu).second) queue.push_back(*mu);
        }
      }
    }
    for (const Residue& z : removable_residues(cur, p)) {
      if (auto mu = e_tilde(cur, z, p)) {
        if (seen.insert(*mu).second) queue.push_back(*mu);
      }
    }
  }
  sort_graph(g);
  return g;
}

CrystalGraph crystal_graph(int level, int n_max, const CherednikParams& p) {
  if (level != p.level()) throw InputError("level does not match the parameters");
  CrystalGraph g;
  for (int n = 0; n <= n_max; ++n) {
    for (auto& lambda : enumerate_multipartitions(level, n)) {
      if (n < n_max) {
        for (const Residue& z : addable_residues(lambda, p)) {
          if (auto mu = f_tilde(lambda, z, p)) g.edges.push_back({lambda, z, *mu});
        }
      }
      g.nodes.push_back(std::move(lambda));
    }
  }
  sort_graph(g);
  return g;
}

std::vector<std::vector<Multipartition>> components(const CrystalGraph& g) {
  std::map<Multipartition, Multipartition> parent;
  for (const auto& v : g.nodes) parent.emplace(v, v);
  std::function<Multipartition(const Multipartition&)> find = [&](const Multipartition& v) {
    Multipartition root = parent.at(v);
    if (root == v) return root;
    root = find(root);
    parent[v] = root;
    return root;
  };
  for (const auto& e : g.edges) {
    Multipartition a = find(e.from), b = find(e.to);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
  std::map<Multipartition, std::vector<Multipartition>> groups;
  for (const auto& v : g.nodes) groups[find(v)].push_back(v);
  std::vector<std::vector<Multipartition>> out;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::string to_dot(const CrystalGraph& g, const CherednikParams& p) {
  std::map<Multipartition, int> ids;
  for (const auto& v : g.nodes) ids.emplace(v, static_cast<int>(ids.size()));
  const bool many_classes = p.classes().size() > 1;
  auto label = [&](const Residue& z) {
    return many_classes ? to_string(z) : std::to_string(z.value);
  };
  DepthMemo memo;
  std::string out = "digraph crystal {\n";
  for (const auto& v : g.nodes) {
    const int depth = km_depth(v, p, &memo);
    out += "  n" + std::to_string(ids.at(v)) + " [label=\"" + to_string(v) +
           "\", depth=" + std::to_string(depth) + (depth == 0 ? ", shape=box" : "") + "];\n";
  }
  for (const auto& e : g.edges) {
    auto to = ids.find(e.to);
    if (to == ids.end()) continue;
    out += "  n" + std::to_string(ids.at(e.from)) + " -> n" + std::to_string(to->second) +
           " [label=\"" + label(e.z) + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace cyclo
