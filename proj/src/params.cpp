// params.cpp
#include "cyclo/params.hpp"

#include <algorithm>

#include "cyclo/errors.hpp"

namespace cyclo {

Kappa Kappa::rational(Rational value) {
  value.canonicalize();
  if (value == 0) throw InputError("kappa must be nonzero");
  Kappa k;
  k.value_ = std::move(value);
  return k;
}

const Rational& Kappa::value() const {
  if (!value_) throw UnsupportedParameter("operation needs a rational kappa");
  return *value_;
}

std::optional<long> Kappa::denominator() const {
  if (!value_) return std::nullopt;
  return value_->get_den().get_si();
}

long Kappa::numerator_abs() const {
  if (!value_) return 1;
  return std::labs(value_->get_num().get_si());
}

Kappa Kappa::negated() const {
  if (!value_) return *this;
  return rational(-*value_);
}

Charge operator+(const Charge& x, const Charge& y) { return {x.a + y.a, x.b + y.b}; }
Charge operator-(const Charge& x, const Charge& y) { return {x.a - y.a, x.b - y.b}; }
Charge operator-(const Charge& x) { return {-x.a, -x.b}; }
CValue operator+(const CValue& x, const CValue& y) { return {x.u + y.u, x.v + y.v}; }
CValue operator-(const CValue& x, const CValue& y) { return {x.u - y.u, x.v - y.v}; }

std::string to_string(const CValue& c) {
  if (c.u == 0) return to_string(c.v);
  return to_string(c.u) + "*kappa" + (c.v < 0 ? "" : "+") + to_string(c.v);
}

std::string to_string(const Residue& z) {
  return std::to_string(z.value) + "@" + std::to_string(z.class_id);
}

std::string to_string(const WallDescriptor& w) {
  if (w.kind == WallDescriptor::Kind::kappa_denominator)
    return "kappa-denominator " + std::to_string(w.denominator);
  return "s" + std::to_string(w.i) + "-s" + std::to_string(w.j) + "=" + std::to_string(w.m);
}

namespace {

bool in_shifted_lattice(const Kappa& kappa, const Charge& d) {
  // d in kappa^{-1}Z + Z
  if (!kappa.is_rational()) return is_integer(d.a) && is_integer(d.b);
  Rational value = d.a + d.b / kappa.value();
  // kappa = +-r/e in lowest terms gives kappa^{-1}Z + Z = (1/r)Z.
  return is_integer(value * kappa.numerator_abs());
}

}  // namespace

bool same_class(const CherednikParams& p, const Charge& si, const Charge& sj) {
  return in_shifted_lattice(p.kappa(), si - sj);
}

CherednikParams::CherednikParams(int level, Kappa kappa, std::vector<Charge> s)
    : level_(level), kappa_(std::move(kappa)), s_(std::move(s)) {
  if (level_ < 1) throw InputError("level must be positive");
  if (static_cast<int>(s_.size()) != level_)
    throw InputError("expected " + std::to_string(level_) + " charges, got " +
                     std::to_string(s_.size()));
  for (auto& c : s_) {
    c.a.canonicalize();
    c.b.canonicalize();
  }
  class_of_.assign(level_, -1);
  for (int i = 0; i < level_; ++i) {
    if (class_of_[i] >= 0) continue;
    class_of_[i] = static_cast<int>(classes_.size());
    classes_.push_back({i});
    for (int j = i + 1; j < level_; ++j) {
      if (class_of_[j] < 0 && in_shifted_lattice(kappa_, s_[i] - s_[j])) {
        class_of_[j] = class_of_[i];
        classes_.back().push_back(j);
      }
    }
  }
}

CValue CherednikParams::h(int i) const {
  const Charge& c = s_.at(i);
  return {c.a, c.b - make_rational(i, level_)};
}

Rational CherednikParams::collapse(const Charge& c) const {
  Rational out = c.a + c.b / kappa_.value();
  out.canonicalize();
  return out;
}

Rational CherednikParams::evaluate(const CValue& c) const {
  Rational out = c.u * kappa_.value() + c.v;
  out.canonicalize();
  return out;
}

std::optional<Rational> CherednikParams::integral_value(const CValue& c) const {
  if (kappa_.is_rational()) {
    Rational v = evaluate(c);
    if (is_integer(v)) return v;
    return std::nullopt;
  }
  if (c.u == 0 && is_integer(c.v)) return c.v;
  return std::nullopt;
}

CherednikParams make_params(Rational kappa, std::vector<long> s) {
  std::vector<Charge> charges;
  for (long v : s) charges.push_back({Rational(v), Rational(0)});
  const int level = static_cast<int>(charges.size());
  return CherednikParams(level, Kappa::rational(std::move(kappa)), std::move(charges));
}

CherednikParams make_irrational_params(std::vector<Charge> s) {
  const int level = static_cast<int>(s.size());
  return CherednikParams(level, Kappa::irrational(), std::move(s));
}

Charge charged_content(const Box& b, const CherednikParams& p) {
  if (b.comp < 0 || b.comp >= p.level())
    throw InputError("component index " + std::to_string(b.comp) + " out of range");
  const Charge& s = p.s(b.comp);
  return {s.a + b.content(), s.b};
}

CValue c_of_box(const Box& b, const CherednikParams& p) {
  const Charge cont = charged_content(b, p);
  const int l = p.level();
  return {cont.a * l, cont.b * l - b.comp};
}

bool box_equivalent(const Box& b, const Box& b2, const CherednikParams& p) {
  const Charge d = charged_content(b, p) - charged_content(b2, p);
  return p.is_integral(CValue{d.a, d.b});
}

Residue residue(const Box& b, const CherednikParams& p) {
  const Charge cont = charged_content(b, p);
  const int cls = p.class_of(b.comp);
  const Charge& rep = p.s(p.classes()[cls].front());
  if (!p.kappa().is_rational()) {
    // Within a class the a-parts differ by integers; subtract the
    // representative's fractional part.
    Rational offset = mod_one(rep.a);
    Rational v = cont.a - offset;
    return {cls, to_long(v)};
  }
  const long r = p.kappa().numerator_abs();
  const long e = *p.e();
  const Rational rep_value = p.collapse(rep);
  // Fractional offset of the class in the lattice (1/r)Z.
  const Rational offset = rep_value - Rational(floor_of(rep_value * r)) / r;
  const Rational scaled = (p.collapse(cont) - offset) * r;
  long n = to_long(scaled);
  long value = 0;
  if (e > 1) {
    long rinv = 1;
    while ((rinv * r) % e != 1) ++rinv;
    value = ((n % e) * rinv % e + e) % e;
  }
  return {cls, value};
}

std::vector<std::vector<int>> equivalence_classes(const CherednikParams& p) { return p.classes(); }

std::vector<WallDescriptor> essential_walls(const CherednikParams& p, int n) {
  if (n < 1) throw InputError("essential_walls: n must be positive");
  std::vector<WallDescriptor> out;
  if (auto e = p.e(); e && *e >= 2 && *e <= n) out.push_back(WallDescriptor::kappa_wall(*e));
  for (int i = 0; i < p.level(); ++i) {
    for (int j = i + 1; j < p.level(); ++j) {
      for (long m = -(n - 1); m <= n - 1; ++m) {
        Charge d = p.s(i) - p.s(j);
        d.a -= m;
        // s_i - s_j - m in kappa^{-1}Z
        bool on_wall;
        if (p.kappa().is_rational()) {
          on_wall = is_integer(p.collapse(d) * p.kappa().value());
        } else {
          on_wall = d.a == 0 && is_integer(d.b);
        }
        if (on_wall) out.push_back(WallDescriptor::charge_wall(i, j, m));
      }
    }
  }
  return out;
}

HeckeExponents hecke_exponents(const CherednikParams& p) {
  if (!p.kappa().is_rational())
    throw UnsupportedParameter("Hecke exponents need a rational kappa");
  HeckeExponents out;
  out.q_exp = mod_one(p.kappa().value());
  for (int i = 0; i < p.level(); ++i) {
    // h_i + i/l = kappa * s_i
    const CValue hi = p.h(i);
    out.Q_exp.push_back(mod_one(p.evaluate(hi) + make_rational(i, p.level())));
  }
  return out;
}

VermaHom rank_one_verma_hom(int level, const std::vector<Rational>& h, int k, int j) {
  if (level < 1 || static_cast<int>(h.size()) != level)
    throw InputError("rank_one_verma_hom: need one h-value per index");
  if (k < 0 || k >= level || j < 0 || j >= level)
    throw InputError("rank_one_verma_hom: index out of range");
  Rational n = (h[j] - h[k]) * level;
  n.canonicalize();
  if (!is_integer(n) || n < 0) return {};
  const long deg = to_long(n);
  if (((deg - (j - k)) % level + level) % level != 0) return {};
  return {1, deg};
}

std::pair<CherednikParams, bool> normalize_for_support(const CherednikParams& p) {
  if (p.kappa().value() < 0) return {p, false};
  // s = a + b/kappa  ->  -s = -a + b/(-kappa)
  std::vector<Charge> flipped;
  for (const auto& c : p.charges()) flipped.push_back({-c.a, c.b});
  return {CherednikParams(p.level(), p.kappa().negated(), std::move(flipped)), true};
}

}  // namespace cyclo
