// fock.cpp
#include "cyclo/fock.hpp"

#include <functional>
#include <set>

#include "cyclo/errors.hpp"
#include "cyclo/linalg.hpp"

namespace cyclo {

FockVector FockVector::basis(const Multipartition& lambda, int bound) {
  FockVector v(lambda.level(), bound);
  v.add(lambda, 1);
  return v;
}

Rational FockVector::coeff(const Multipartition& lambda) const {
  auto it = entries_.find(lambda);
  return it == entries_.end() ? Rational(0) : it->second;
}

void FockVector::add(const Multipartition& lambda, const Rational& c) {
  if (c == 0) return;
  if (lambda.level() != level_) throw InputError("level mismatch in Fock vector");
  if (lambda.size() > bound_)
    throw TruncationError("degree " + std::to_string(lambda.size()) + " exceeds the bound " +
                          std::to_string(bound_));
  auto [it, fresh] = entries_.emplace(lambda, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) entries_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [l, c] : o.entries_) add(l, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [l, c] : o.entries_) add(l, -c);
  return *this;
}

FockVector& FockVector::operator*=(const Rational& c) {
  if (c == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [l, x] : entries_) x *= c;
  return *this;
}

FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
FockVector operator*(const Rational& c, FockVector v) { return v *= c; }

Rational pairing(const FockVector& a, const FockVector& b) {
  Rational out = 0;
  for (const auto& [l, c] : a.entries()) out += c * b.coeff(l);
  return out;
}

std::string to_string(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [l, c] : v.entries()) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational a = abs(c);
    if (a != 1) out += to_string(a) + "*";
    out += to_string(l);
  }
  return out;
}

FockVector f_z_op(const FockVector& v, const Residue& z, const CherednikParams& p) {
  FockVector out(v.level(), v.bound());
  for (const auto& [lambda, c] : v.entries()) {
    for (const Box& b : addable_boxes(lambda)) {
      if (residue(b, p) == z) out.add(add_box(lambda, b), c);
    }
  }
  return out;
}

FockVector e_z_op(const FockVector& v, const Residue& z, const CherednikParams& p) {
  FockVector out(v.level(), v.bound());
  for (const auto& [lambda, c] : v.entries()) {
    for (const Box& b : removable_boxes(lambda)) {
      if (residue(b, p) == z) out.add(remove_box(lambda, b), c);
    }
  }
  return out;
}

namespace {

struct SignedPartition {
  Partition result;
  int sign;
};

std::vector<SignedPartition> wedge_moves(const Partition& nu, int r, bool add) {
  const int len = nu.length() + r;
  std::vector<long> beta(len);
  for (int k = 1; k <= len; ++k) beta[k - 1] = nu.part(k) - k + len;
  const std::set<long> occupied(beta.begin(), beta.end());
  std::vector<SignedPartition> out;
  for (int k = 0; k < len; ++k) {
    const long from = beta[k];
    const long to = add ? from + r : from - r;
    if (to < 0 || occupied.count(to)) continue;
    int jumped = 0;
    for (long b : beta) {
      if (b > std::min(from, to) && b < std::max(from, to)) ++jumped;
    }
    std::vector<long> moved = beta;
    moved[k] = to;
    std::sort(moved.rbegin(), moved.rend());
    std::vector<int> parts(len);
    for (int i = 1; i <= len; ++i) parts[i - 1] = static_cast<int>(moved[i - 1] + i - len);
    out.push_back({Partition(std::move(parts)), jumped % 2 ? -1 : 1});
  }
  return out;
}

std::vector<SignedPartition> ribbon_step(const Partition& nu, int r, bool add,
                                         HeisenbergModel model) {
  if (model == HeisenbergModel::wedge) return wedge_moves(nu, r, add);
  std::vector<SignedPartition> out;
  for (auto& mv : ribbon_moves(nu, r, add ? RibbonDirection::add : RibbonDirection::remove))
    out.push_back({std::move(mv.result), mv.sign()});
  return out;
}

FockVector heisenberg(const FockVector& v, int d, const CherednikParams& p, HeisenbergModel model,
                      std::optional<int> class_id, bool add) {
  if (d < 1) throw InputError("Heisenberg index must be positive");
  if (!p.e()) throw UnsupportedParameter("Heisenberg operators need a rational kappa");
  if (v.level() != p.level()) throw InputError("level mismatch");
  const int r = d * static_cast<int>(*p.e());
  FockVector out(v.level(), v.bound());
  for (const auto& [lambda, c] : v.entries()) {
    for (int i = 0; i < lambda.level(); ++i) {
      if (class_id && p.class_of(i) != *class_id) continue;
      for (const auto& mv : ribbon_step(lambda[i], r, add, model))
        out.add(lambda.with_component(i, mv.result), c * mv.sign);
    }
  }
  return out;
}

}  // namespace

FockVector b_plus_op(const FockVector& v, int d, const CherednikParams& p, HeisenbergModel model,
                     std::optional<int> class_id) {
  return heisenberg(v, d, p, model, class_id, true);
}

FockVector b_minus_op(const FockVector& v, int d, const CherednikParams& p,
                      HeisenbergModel model, std::optional<int> class_id) {
  return heisenberg(v, d, p, model, class_id, false);
}

Integer mn_character(const Partition& mu, const Partition& rho) {
  if (mu.size() != rho.size()) return 0;
  if (rho.empty()) return 1;
  const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  Integer out = 0;
  for (const auto& mv : ribbon_moves(mu, rho.part(1), RibbonDirection::remove))
    out += mv.sign() * mn_character(mv.result, rest);
  return out;
}

namespace {

Integer z_rho(const Partition& rho) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int part : rho.parts()) ++mult[part];
  for (auto [part, m] : mult) {
    for (int k = 1; k <= m; ++k) z *= Integer(part) * k;
  }
  return z;
}

}  // namespace

FockVector plethysm_class(const Partition& mu, int e, int bound) {
  if (e < 1) throw InputError("plethysm needs e >= 1");
  if (e * mu.size() > bound) throw TruncationError("plethysm class exceeds the bound");
  const CherednikParams level_one = make_params(make_rational(-1, e), {0});
  FockVector out(1, bound);
  for (const Partition& rho : enumerate_partitions(mu.size())) {
    const Integer chi = mn_character(mu, rho);
    if (chi == 0) continue;
    FockVector term = FockVector::basis(Multipartition(1), bound);
    for (int part : rho.parts()) term = b_plus_op(term, part, level_one);
    Rational coeff(chi, z_rho(rho));
    coeff.canonicalize();
    out += coeff * term;
  }
  return out;
}

std::vector<Residue> residues_up_to(int level, int n, const CherednikParams& p) {
  std::set<Residue> out;
  for (int m = 0; m <= n; ++m) {
    for (const auto& lambda : enumerate_multipartitions(level, m)) {
      for (const Box& b : addable_boxes(lambda)) out.insert(residue(b, p));
    }
  }
  return {out.begin(), out.end()};
}

namespace {

// Coordinates of FockVectors of one degree in the canonical basis.
class DegreeBasis {
 public:
  DegreeBasis(int level, int n) : labels_(enumerate_multipartitions(level, n)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
  }
  std::size_t size() const { return labels_.size(); }
  Row coords(const FockVector& v) const {
    Row r(labels_.size(), Rational(0));
    for (const auto& [l, c] : v.entries()) r[index_.at(l)] = c;
    return r;
  }
  FockVector vector(const Row& r, int bound) const {
    FockVector v(labels_.front().level(), bound);
    for (std::size_t i = 0; i < r.size(); ++i) v.add(labels_[i], r[i]);
    return v;
  }
  const std::vector<Multipartition>& labels() const { return labels_; }

 private:
  std::vector<Multipartition> labels_;
  std::map<Multipartition, std::size_t> index_;
};

std::vector<FockVector> reduce(const std::vector<FockVector>& vs, const DegreeBasis& basis,
                               int bound) {
  std::vector<Row> rows;
  for (const auto& v : vs) rows.push_back(basis.coords(v));
  std::vector<FockVector> out;
  for (const auto& r : span_basis(std::move(rows))) out.push_back(basis.vector(r, bound));
  return out;
}

}  // namespace

std::vector<FockVector> singular_subspace(int n, const CherednikParams& p) {
  if (n < 0) throw InputError("negative degree");
  const int level = p.level();
  const DegreeBasis basis(level, n);
  Matrix conditions;
  auto add_rows = [&](const std::function<FockVector(const FockVector&)>& op, int target) {
    const DegreeBasis tb(level, target);
    Matrix block(tb.size(), Row(basis.size(), Rational(0)));
    std::map<Multipartition, std::size_t> idx;
    for (std::size_t i = 0; i < tb.size(); ++i) idx.emplace(tb.labels()[i], i);
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const FockVector image = op(FockVector::basis(basis.labels()[c], n));
      for (const auto& [mu, x] : image.entries()) block[idx.at(mu)][c] = x;
    }
    for (auto& row : block) conditions.push_back(std::move(row));
  };

  if (n > 0) {
    for (const Residue& z : residues_up_to(level, n, p))
      add_rows([&](const FockVector& v) { return e_z_op(v, z, p); }, n - 1);
    if (auto e = p.e()) {
      for (int d = 1; d * *e <= n; ++d) {
        for (std::size_t a = 0; a < p.classes().size(); ++a) {
          add_rows([&](const FockVector& v) {
                     return b_minus_op(v, d, p, HeisenbergModel::ribbon, static_cast<int>(a));
                   },
                   n - d * static_cast<int>(*e));
        }
      }
    }
  }
  std::vector<FockVector> out;
  if (conditions.empty()) {
    for (const auto& l : basis.labels()) out.push_back(FockVector::basis(l, n));
    return out;
  }
  for (const auto& r : kernel(std::move(conditions), basis.size()))
    out.push_back(basis.vector(r, n));
  return reduce(out, basis, n);
}

long filtration_dim(int p0, int q0, int n, const CherednikParams& p) {
  if (n < 0 || p0 < 0 || q0 < 0) throw InputError("filtration indices must be nonnegative");
  const int level = p.level();
  const long e = p.e().value_or(0);
  std::vector<DegreeBasis> bases;
  for (int m = 0; m <= n; ++m) bases.emplace_back(level, m);

  std::map<std::pair<int, int>, std::vector<FockVector>> k_memo;
  std::function<const std::vector<FockVector>&(int, int)> K = [&](int w, int m)
      -> const std::vector<FockVector>& {
    const auto key = std::make_pair(w, m);
    if (auto it = k_memo.find(key); it != k_memo.end()) return it->second;
    std::vector<FockVector> gens;
    if (w == 0) {
      for (auto& v : singular_subspace(m, p)) {
        FockVector lifted(level, n);
        lifted += v;
        gens.push_back(std::move(lifted));
      }
    } else if (e > 0) {
      for (int d = 1; d <= w && d * e <= m; ++d) {
        const auto& lower = K(w - d, m - d * static_cast<int>(e));
        for (std::size_t a = 0; a < p.classes().size(); ++a) {
          for (const auto& v : lower)
            gens.push_back(b_plus_op(v, d, p, HeisenbergModel::ribbon, static_cast<int>(a)));
        }
      }
    }
    return k_memo.emplace(key, reduce(gens, bases[m], n)).first->second;
  };

  std::vector<Residue> zs = residues_up_to(level, n, p);
  std::map<std::pair<int, int>, std::vector<FockVector>> t_memo;
  std::function<const std::vector<FockVector>&(int, int)> T = [&](int k, int m)
      -> const std::vector<FockVector>& {
    const auto key = std::make_pair(k, m);
    if (auto it = t_memo.find(key); it != t_memo.end()) return it->second;
    std::vector<FockVector> gens;
    if (k == 0) {
      for (int w = 0; w <= q0; ++w) {
        const auto& part = K(w, m);
        gens.insert(gens.end(), part.begin(), part.end());
      }
    } else if (m >= 1) {
      for (const auto& v : T(k - 1, m - 1)) {
        for (const Residue& z : zs) gens.push_back(f_z_op(v, z, p));
      }
    }
    return t_memo.emplace(key, reduce(gens, bases[m], n)).first->second;
  };

  std::vector<FockVector> all;
  for (int k = 0; k <= p0 && k <= n; ++k) {
    const auto& part = T(k, n);
    all.insert(all.end(), part.begin(), part.end());
  }
  return static_cast<long>(reduce(all, bases[n], n).size());
}

std::string to_string(const ChargedWord& w) {
  std::string out = "(";
  for (std::size_t r = 0; r < w.runs.size(); ++r) {
    if (r) out += " | ";
    for (std::size_t k = 0; k < w.runs[r].size(); ++k) {
      if (k) out += ",";
      out += std::to_string(w.runs[r][k]);
    }
  }
  return out + ")";
}

ChargedWord embed_to_charged(const Multipartition& lambda, const std::vector<long>& s) {
  if (static_cast<int>(s.size()) != lambda.level())
    throw InputError("one charge per component expected");
  ChargedWord w;
  for (int i = 0; i < lambda.level(); ++i) {
    if (s[i] < 1 || s[i] < lambda.size())
      throw PreconditionError("charge " + std::to_string(s[i]) + " is smaller than |lambda| = " +
                              std::to_string(lambda.size()));
    std::vector<long> run;
    for (long k = 1; k <= s[i]; ++k) run.push_back(s[i] - k + 1 + lambda[i].part(static_cast<int>(k)));
    w.runs.push_back(std::move(run));
  }
  return w;
}

Multipartition from_charged(const ChargedWord& w, const std::vector<long>& s) {
  if (w.runs.size() != s.size()) throw InputError("one charge per run expected");
  std::vector<Partition> comps;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (static_cast<long>(w.runs[i].size()) != s[i]) throw InputError("run length differs from charge");
    std::vector<int> parts;
    for (long k = 1; k <= s[i]; ++k) parts.push_back(static_cast<int>(w.runs[i][k - 1] - s[i] + k - 1));
    comps.emplace_back(std::move(parts));
  }
  return Multipartition(std::move(comps));
}

namespace {

long mod(long a, long e) { return ((a % e) + e) % e; }

WordSum shift_entries(const ChargedWord& w, long residue, long e, int step) {
  if (e < 1) throw InputError("e must be positive");
  WordSum out;
  for (std::size_t r = 0; r < w.runs.size(); ++r) {
    const auto& run = w.runs[r];
    for (std::size_t k = 0; k < run.size(); ++k) {
      if (mod(run[k], e) != mod(residue, e)) continue;
      const long moved = run[k] + step;
      if (moved < 1) continue;
      if (k > 0 && run[k - 1] <= moved) continue;
      if (k + 1 < run.size() && run[k + 1] >= moved) continue;
      ChargedWord next = w;
      next.runs[r][k] = moved;
      ++out[next];
    }
  }
  return out;
}

}  // namespace

WordSum wedge_f_op(const ChargedWord& w, long i, long e) { return shift_entries(w, i, e, 1); }
WordSum wedge_e_op(const ChargedWord& w, long i, long e) { return shift_entries(w, i + 1, e, -1); }

}  // namespace cyclo
