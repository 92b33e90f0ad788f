// fock.hpp - the truncated level-l Fock space with exact coefficients:
// Kac-Moody operators, Heisenberg operators (ribbon and wedge realizations),
// plethysm classes, singular subspaces and the (p, q) filtration.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cyclo/params.hpp"
#include "cyclo/partition.hpp"
#include "cyclo/rational.hpp"

namespace cyclo {

class FockVector {
 public:
  FockVector(int level, int bound) : level_(level), bound_(bound) {}
  static FockVector basis(const Multipartition& lambda, int bound);

  int level() const { return level_; }
  int bound() const { return bound_; }
  const std::map<Multipartition, Rational>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  Rational coeff(const Multipartition& lambda) const;

  // Throws TruncationError past the bound; zero results are erased.
  void add(const Multipartition& lambda, const Rational& c);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Rational& c);
  bool operator==(const FockVector& o) const { return entries_ == o.entries_; }

 private:
  int level_;
  int bound_;
  std::map<Multipartition, Rational> entries_;
};

FockVector operator+(FockVector a, const FockVector& b);
FockVector operator-(FockVector a, const FockVector& b);
FockVector operator*(const Rational& c, FockVector v);
// Orthonormal pairing on the multipartition basis.
Rational pairing(const FockVector& a, const FockVector& b);
std::string to_string(const FockVector& v);

FockVector f_z_op(const FockVector& v, const Residue& z, const CherednikParams& p);
FockVector e_z_op(const FockVector& v, const Residue& z, const CherednikParams& p);

enum class HeisenbergModel { ribbon, wedge };

// B_d adds d*e-ribbons with sign (-1)^height on every component (or only on
// the components of one class); B_{-d} removes them with the same signs.
// Wedge model: per component, beta numbers lambda_k - k + L for k = 1..L with
// L = length + d*e; one entry moves by d*e, the sign counts the entries it
// jumps over, collisions and negative entries vanish.
FockVector b_plus_op(const FockVector& v, int d, const CherednikParams& p,
                     HeisenbergModel model = HeisenbergModel::ribbon,
                     std::optional<int> class_id = std::nullopt);
FockVector b_minus_op(const FockVector& v, int d, const CherednikParams& p,
                      HeisenbergModel model = HeisenbergModel::ribbon,
                      std::optional<int> class_id = std::nullopt);

// Murnaghan-Nakayama character chi^mu at cycle type rho.
Integer mn_character(const Partition& mu, const Partition& rho);

// s_mu(z^e) in the level-one Schur basis: sum_rho chi^mu(rho)/z_rho p_{e rho}.
FockVector plethysm_class(const Partition& mu, int e, int bound);

// Residues that label e_z / f_z operators touching degree n (all classes).
std::vector<Residue> residues_up_to(int level, int n, const CherednikParams& p);

// Vectors of degree n killed by every e_z and every class-restricted B_{-d}.
std::vector<FockVector> singular_subspace(int n, const CherednikParams& p);

// dim of the degree-n part of the span of f-words of length <= p0 applied to
// B-words of total weight <= q0 applied to singular vectors.
long filtration_dim(int p0, int q0, int n, const CherednikParams& p);

struct OperatorMatrix {
  int degree_from = 0;
  int degree_to = 0;
  std::vector<Multipartition> row_labels;  // degree_to basis
  std::vector<Multipartition> col_labels;  // degree_from basis
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries;  // (row, col, value)
};

// Matrix of a linear map on the canonical bases of two degrees.
template <class Op>
OperatorMatrix operator_matrix(int level, int from, int to, int bound, Op&& op) {
  OperatorMatrix m;
  m.degree_from = from;
  m.degree_to = to;
  m.col_labels = enumerate_multipartitions(level, from);
  m.row_labels = enumerate_multipartitions(level, to);
  std::map<Multipartition, std::size_t> row_of;
  for (std::size_t r = 0; r < m.row_labels.size(); ++r) row_of.emplace(m.row_labels[r], r);
  for (std::size_t c = 0; c < m.col_labels.size(); ++c) {
    const FockVector image = op(FockVector::basis(m.col_labels[c], bound));
    for (const auto& [mu, coeff] : image.entries()) {
      auto it = row_of.find(mu);
      if (it != row_of.end()) m.entries.emplace_back(it->second, c, coeff);
    }
  }
  std::sort(m.entries.begin(), m.entries.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  return m;
}

// Charged words: l strictly decreasing runs of positive integers.
struct ChargedWord {
  std::vector<std::vector<long>> runs;

  bool operator==(const ChargedWord&) const = default;
  auto operator<=>(const ChargedWord&) const = default;
};

using WordSum = std::map<ChargedWord, long>;

std::string to_string(const ChargedWord& w);

// A_lambda: run i is (s_i + lambda_1, s_i - 1 + lambda_2, ..., 1 + lambda_{s_i}).
// Needs s_i >= |lambda| for every i.
ChargedWord embed_to_charged(const Multipartition& lambda, const std::vector<long>& s);
Multipartition from_charged(const ChargedWord& w, const std::vector<long>& s);

// f_i: a -> a + 1 on one entry a = i mod e; e_i: a -> a - 1 on one entry
// a = i + 1 mod e. Words that stop being strictly decreasing, or reach the
// implicit entry 0, are dropped.
WordSum wedge_f_op(const ChargedWord& w, long i, long e);
WordSum wedge_e_op(const ChargedWord& w, long i, long e);

}  // namespace cyclo
