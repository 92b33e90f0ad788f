// params.hpp - Cherednik parameters for G(l,1,n) and the quantities derived
// from them: h_i, c-values of boxes, residues, decomposition classes,
// essential walls and Hecke exponents.
//
// kappa is either an exact nonzero rational or a symbolic irrational. Charges
// are stored as pairs (a, b) meaning a + b/kappa, so that configurations like
// s_1 = m - 1/kappa stay exact in both cases. No floating point is used.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/partition.hpp"
#include "cyclo/rational.hpp"

namespace cyclo {

class Kappa {
 public:
  static Kappa rational(Rational value);  // throws InputError on zero
  static Kappa irrational() { return Kappa(); }

  bool is_rational() const { return value_.has_value(); }
  // Throws UnsupportedParameter for the irrational case.
  const Rational& value() const;
  // e = denominator of kappa in lowest terms; nullopt stands for infinity.
  std::optional<long> denominator() const;
  // |numerator| of kappa in lowest terms (1 for irrational kappa).
  long numerator_abs() const;
  Kappa negated() const;

  bool operator==(const Kappa&) const = default;

 private:
  Kappa() = default;
  std::optional<Rational> value_;
};

// a + b * kappa^{-1}
struct Charge {
  Rational a;
  Rational b;

  bool operator==(const Charge&) const = default;
};

Charge operator+(const Charge& x, const Charge& y);
Charge operator-(const Charge& x, const Charge& y);
Charge operator-(const Charge& x);

// u * kappa + v
struct CValue {
  Rational u;
  Rational v;

  bool operator==(const CValue&) const = default;
};

CValue operator+(const CValue& x, const CValue& y);
CValue operator-(const CValue& x, const CValue& y);

std::string to_string(const CValue& c);

struct Residue {
  int class_id = 0;
  long value = 0;  // modulo e, or an exact integer when e is infinite

  bool operator==(const Residue&) const = default;
  auto operator<=>(const Residue&) const = default;
};

std::string to_string(const Residue& z);

struct WallDescriptor {
  enum class Kind { kappa_denominator, charge_difference };
  Kind kind = Kind::charge_difference;
  long denominator = 0;  // kappa_denominator
  int i = 0, j = 0;      // charge_difference: h_i - h_j = kappa * m
  long m = 0;

  static WallDescriptor kappa_wall(long d) { return {Kind::kappa_denominator, d, 0, 0, 0}; }
  static WallDescriptor charge_wall(int i, int j, long m) {
    return {Kind::charge_difference, 0, i, j, m};
  }
  bool operator==(const WallDescriptor&) const = default;
};

std::string to_string(const WallDescriptor& w);

struct HeckeExponents {
  Rational q_exp;               // q = exp(2 pi i q_exp)
  std::vector<Rational> Q_exp;  // Q_i = exp(2 pi i Q_exp[i])
};

class CherednikParams {
 public:
  CherednikParams(int level, Kappa kappa, std::vector<Charge> s);

  int level() const { return level_; }
  const Kappa& kappa() const { return kappa_; }
  const std::vector<Charge>& charges() const { return s_; }
  const Charge& s(int i) const { return s_.at(i); }
  std::optional<long> e() const { return kappa_.denominator(); }

  // h_i = kappa * s_i - i / level, recomputed on every call.
  CValue h(int i) const;

  // a + b/kappa as one rational; rational kappa only.
  Rational collapse(const Charge& c) const;
  // u*kappa + v as one rational; rational kappa only.
  Rational evaluate(const CValue& c) const;
  // The exact integer value of c, or nullopt when c is not an integer. For
  // irrational kappa this requires u == 0.
  std::optional<Rational> integral_value(const CValue& c) const;
  bool is_integral(const CValue& c) const { return integral_value(c).has_value(); }

  // Classes of i ~ j iff s_i - s_j lies in kappa^{-1}Z + Z, ordered by least
  // member.
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int comp) const { return class_of_.at(comp); }

  bool operator==(const CherednikParams& o) const {
    return level_ == o.level_ && kappa_ == o.kappa_ && s_ == o.s_;
  }

 private:
  int level_;
  Kappa kappa_;
  std::vector<Charge> s_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

// Convenience constructor for integral charges.
CherednikParams make_params(Rational kappa, std::vector<long> s);
CherednikParams make_irrational_params(std::vector<Charge> s);

bool same_class(const CherednikParams& p, const Charge& si, const Charge& sj);

// cont^s(b) = x - y + s_i
Charge charged_content(const Box& b, const CherednikParams& p);
// c_b = kappa*l*(x - y) + l*h_i = kappa*l*cont^s(b) - i
CValue c_of_box(const Box& b, const CherednikParams& p);
// kappa * (cont(b) - cont(b')) in Z
bool box_equivalent(const Box& b, const Box& b2, const CherednikParams& p);
Residue residue(const Box& b, const CherednikParams& p);

std::vector<std::vector<int>> equivalence_classes(const CherednikParams& p);
std::vector<WallDescriptor> essential_walls(const CherednikParams& p, int n);
HeckeExponents hecke_exponents(const CherednikParams& p);

struct VermaHom {
  int dim = 0;                   // dim Hom(Delta_k, Delta_j), 0 or 1
  std::optional<long> witness;   // the degree n of the singular vector x^n
};

// Rank-one group mu_l: Hom(Delta_k, Delta_j) is one-dimensional iff some
// n >= 0 with n = j - k (mod l) has h_j = h_k + n/l. n is forced by the
// h-values, so the test is exact.
VermaHom rank_one_verma_hom(int level, const std::vector<Rational>& h, int k, int j);

// (kappa, s) -> (-kappa, -s) when kappa > 0, reporting whether labels must be
// transposed. Rational kappa only.
std::pair<CherednikParams, bool> normalize_for_support(const CherednikParams& p);

}  // namespace cyclo
