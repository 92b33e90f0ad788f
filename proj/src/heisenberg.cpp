// heisenberg.cpp
#include "cyclo/heisenberg.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "cyclo/crystal.hpp"
#include "cyclo/errors.hpp"

namespace cyclo {

namespace {

// e = 1 divides everything: nu' = nu.
Division divide(const Partition& nu, long e) {
  if (e == 1) return {nu, Partition()};
  return divide_with_remainder(nu, static_cast<int>(e));
}

void require_asymptotic(const Multipartition& lambda, int j, const CherednikParams& p) {
  if (!p.kappa().is_rational())
    throw UnsupportedParameter("asymptotic chamber needs a rational kappa");
  if (j < 0 || j >= p.level()) throw InputError("component index out of range");
  const Rational sj = p.collapse(p.s(j));
  for (int i = 0; i < p.level(); ++i) {
    if (i == j) continue;
    if (!(sj < p.collapse(p.s(i)) - lambda.size()))
      throw PreconditionError("parameters are not asymptotic for component " +
                              std::to_string(j));
  }
}

CherednikParams side_params(long m, TransportDirection side_b) {
  const Rational b = side_b == TransportDirection::a_to_b ? 0 : 1;
  return make_irrational_params({Charge{Rational(m), 0}, Charge{0, b}});
}

std::map<Residue, int> weight(const Multipartition& lambda, const CherednikParams& p) {
  std::map<Residue, int> w;
  for (const Box& b : boxes(lambda)) ++w[residue(b, p)];
  return w;
}

// Singular vertices of one side, keyed by (m, size, side).
const std::vector<Multipartition>& singular_vertices(long m, int n, bool side_b) {
  static std::mutex mu;
  static std::map<std::tuple<long, int, bool>, std::vector<Multipartition>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(m, n, side_b);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const CherednikParams p =
      side_params(m, side_b ? TransportDirection::b_to_a : TransportDirection::a_to_b);
  std::vector<Multipartition> out;
  for (auto& lambda : enumerate_multipartitions(2, n)) {
    if (is_singular(lambda, p)) out.push_back(std::move(lambda));
  }
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

AsymptoticQ asymptotic_q(const Multipartition& lambda, int j, const CherednikParams& p) {
  require_asymptotic(lambda, j, p);
  Division d = divide(lambda[j], *p.e());
  const long q = d.quotient.size();
  return {q, std::move(d.quotient), std::move(d.remainder)};
}

std::optional<Multipartition> heis_e_asymptotic(const Multipartition& lambda, int j, long content,
                                                const CherednikParams& p) {
  require_asymptotic(lambda, j, p);
  const long e = *p.e();
  const Division d = divide(lambda[j], e);
  for (const Box& b : removable_boxes(d.quotient)) {
    if (b.content() != content) continue;
    const Partition lowered_quotient =
        remove_box(Multipartition({d.quotient}), b)[0];
    return lambda.with_component(j, scale(lowered_quotient, static_cast<int>(e)) + d.remainder);
  }
  return std::nullopt;
}

PartitionPair level2_transport(const PartitionPair& pair, long m, TransportDirection dir) {
  const bool from_b = dir == TransportDirection::b_to_a;
  const CherednikParams src = side_params(m, from_b ? TransportDirection::b_to_a
                                                    : TransportDirection::a_to_b);
  const CherednikParams dst = side_params(m, from_b ? TransportDirection::a_to_b
                                                    : TransportDirection::b_to_a);
  const Multipartition lambda({pair.first, pair.second});
  const HighestWeightPath path = path_to_singular(lambda, src);
  const int n = path.top.size();

  const auto& src_sing = singular_vertices(m, n, from_b);
  const auto& dst_sing = singular_vertices(m, n, !from_b);
  const auto w = weight(path.top, src);
  std::optional<Multipartition> image;
  for (const auto& cand : dst_sing) {
    if (weight(cand, dst) != w) continue;
    if (image) throw Error("two singular vertices of equal weight in transport target");
    image = cand;
  }
  int same_weight_src = 0;
  for (const auto& cand : src_sing) same_weight_src += weight(cand, src) == w;
  if (!image || same_weight_src != 1)
    throw Error("no unique singular vertex matching " + to_string(path.top));

  Multipartition cur = *image;
  for (auto it = path.lowering.rbegin(); it != path.lowering.rend(); ++it) {
    auto next = f_tilde(cur, *it, dst);
    if (!next) throw Error("transport replay left the crystal at " + to_string(cur));
    cur = std::move(*next);
  }
  return {cur[0], cur[1]};
}

Multipartition wall_cross(const Multipartition& lambda, const WallCrossStep& step,
                          const CherednikParams& p) {
  const WallDescriptor& w = step.wall;
  if (w.kind != WallDescriptor::Kind::charge_difference)
    throw UnsupportedParameter("only charge walls can be crossed");
  if (w.i < 0 || w.j < 0 || w.i >= p.level() || w.j >= p.level() || w.i == w.j)
    throw InputError("wall indices out of range");
  Charge d = p.s(w.i) - p.s(w.j);
  d.a -= w.m;
  bool on_wall;
  if (p.kappa().is_rational()) {
    on_wall = is_integer(p.collapse(d) * p.kappa().value());
  } else {
    on_wall = d.a == 0 && is_integer(d.b);
  }
  if (!on_wall) throw PreconditionError("parameters do not lie on " + to_string(w));

  const auto dir = step.direction == WallCrossStep::Direction::lower
                       ? TransportDirection::a_to_b
                       : TransportDirection::b_to_a;
  auto [pi, pj] = level2_transport({lambda[w.i], lambda[w.j]}, w.m, dir);
  return lambda.with_component(w.i, std::move(pi)).with_component(w.j, std::move(pj));
}

CherednikParams lowered(const CherednikParams& p, int j) {
  std::vector<Charge> s = p.charges();
  s.at(j).b += 1;
  return CherednikParams(p.level(), p.kappa(), std::move(s));
}

namespace {

long class_q(Multipartition lambda, CherednikParams p, const std::vector<int>& members, int j) {
  const long e = *p.e();
  const int n = lambda.size();
  auto asymptotic = [&] {
    const Rational sj = p.collapse(p.s(j));
    for (int i : members) {
      if (i != j && !(sj < p.collapse(p.s(i)) - n)) return false;
    }
    return true;
  };
  // Partners in the order their walls are met while s_j moves down by one
  // period 1/kappa.
  std::vector<int> order;
  for (int i = j - 1; i >= 0; --i) order.push_back(i);
  for (int i = p.level() - 1; i > j; --i) order.push_back(i);

  while (!asymptotic()) {
    for (int i : order) {
      if (p.class_of(i) != p.class_of(j)) continue;
      Charge sj = p.s(j);
      if (i > j) sj.b += 1;
      const Rational m = p.collapse(p.s(i) - sj);
      if (!is_integer(m)) continue;
      lambda = wall_cross(lambda, {WallDescriptor::charge_wall(i, j, to_long(m)),
                                   WallCrossStep::Direction::lower}, p);
    }
    p = lowered(p, j);
  }
  return divide(lambda[j], e).quotient.size();
}

}  // namespace

long heis_q(const Multipartition& lambda, const CherednikParams& p, const LoweringChoice& choice) {
  if (lambda.level() != p.level()) throw InputError("level mismatch");
  if (!p.kappa().is_rational()) return 0;
  if (p.kappa().value() > 0) {
    auto [np, flipped] = normalize_for_support(p);
    return heis_q(transpose(lambda), np, choice);
  }
  long q = 0;
  const auto& classes = p.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& members = classes[c];
    int j = members.back();
    if (c < choice.size() && choice[c]) {
      j = *choice[c];
      if (p.class_of(j) != static_cast<int>(c))
        throw InputError("lowering index " + std::to_string(j) + " is not in class " +
                         std::to_string(c));
    }
    if (members.size() == 1) {
      q += divide(lambda[j], *p.e()).quotient.size();
    } else {
      q += class_q(lambda, p, members, j);
    }
  }
  return q;
}

SupportDescriptor support(const Multipartition& lambda, const CherednikParams& p) {
  SupportDescriptor out;
  const long n = lambda.size();
  out.p = km_depth(lambda, p);
  out.q = heis_q(lambda, p);
  const long e = p.e().value_or(0);
  const long rank = n - out.p - e * out.q;
  if (rank < 0) throw Error("depths exceed the size of " + to_string(lambda));
  out.stabilizer = {p.level(), rank, e, out.q};
  if (p.level() >= 2) {
    out.dim_support = out.p + out.q;
  } else {
    // h is the reflection representation, of dimension n - 1.
    out.dim_support = std::max(0L, out.p + out.q + (rank > 0 ? 1 : 0) - 1);
  }
  out.finite_dimensional = out.dim_support == 0;
  return out;
}

}  // namespace cyclo
