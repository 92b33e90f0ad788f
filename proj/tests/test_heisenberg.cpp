#include "doctest.h"
#include "oracles.hpp"

#include "cyclo/crystal.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/heisenberg.hpp"

using namespace cyclo;

namespace {

Multipartition mp(std::vector<Partition> c) { return Multipartition(std::move(c)); }

WallCrossStep lower(int i, int j, long m) {
  return {WallDescriptor::charge_wall(i, j, m), WallCrossStep::Direction::lower};
}

}  // namespace

TEST_CASE("asymptotic depth by division") {
  const auto three = make_params(make_rational(-1, 3), {0});
  auto a = asymptotic_q(mp({{7, 3, 1}}), 0, three);
  CHECK(a.q == 1);
  CHECK(a.quotient == Partition{1});
  CHECK(a.remainder == Partition{4, 3, 1});
  CHECK(asymptotic_q(Multipartition(1), 0, three).q == 0);
  const auto two = make_params(make_rational(-1, 2), {0});
  a = asymptotic_q(mp({{2}}), 0, two);
  CHECK(a.q == 1);
  CHECK(a.quotient == Partition{1});
  CHECK(a.remainder.empty());

  const auto close = make_params(make_rational(-1, 2), {0, -1});
  CHECK_THROWS_AS(asymptotic_q(mp({{1}, {1}}), 1, close), PreconditionError);
  const auto far = make_params(make_rational(-1, 2), {0, -6});
  CHECK(asymptotic_q(mp({{1}, {2, 2}}), 1, far).q == 2);
}

TEST_CASE("asymptotic Heisenberg lowering") {
  const auto three = make_params(make_rational(-1, 3), {0});
  CHECK(*heis_e_asymptotic(mp({{7, 3, 1}}), 0, 0, three) == mp({{4, 3, 1}}));
  CHECK(!heis_e_asymptotic(mp({{4, 3, 1}}), 0, 0, three));
  CHECK(!heis_e_asymptotic(mp({{7, 3, 1}}), 0, 1, three));
  const auto two = make_params(make_rational(-1, 2), {0});
  CHECK(*heis_e_asymptotic(mp({{2}}), 0, 0, two) == Multipartition(1));
}

TEST_CASE("level-two transport examples") {
  const PartitionPair empty{Partition(), Partition()};
  for (long m = -3; m <= 3; ++m) CHECK(level2_transport(empty, m, TransportDirection::a_to_b) == empty);
  CHECK(level2_transport({Partition{1}, Partition()}, 0, TransportDirection::a_to_b) ==
        PartitionPair{Partition(), Partition{1}});
  CHECK(level2_transport({Partition(), Partition{1}}, 0, TransportDirection::a_to_b) ==
        PartitionPair{Partition{1}, Partition()});
}

TEST_CASE("transport is a size-preserving crystal isomorphism") {
  for (long m = -3; m <= 3; ++m) {
    const auto a = make_irrational_params({Charge{Rational(m), 0}, Charge{0, 0}});
    const auto b = make_irrational_params({Charge{Rational(m), 0}, Charge{0, 1}});
    for (int n = 0; n <= 5; ++n) {
      std::set<Multipartition> image;
      for (const auto& lam : enumerate_multipartitions(2, n)) {
        const auto [x, y] = level2_transport({lam[0], lam[1]}, m, TransportDirection::a_to_b);
        const Multipartition t({x, y});
        CHECK(t.size() == n);
        image.insert(t);
        CHECK(level2_transport({x, y}, m, TransportDirection::b_to_a) == PartitionPair{lam[0], lam[1]});
        for (const Box& box : addable_boxes(lam)) {
          const Residue z = residue(box, a);
          const auto f = f_tilde(lam, z, a);
          const auto g = f_tilde(t, z, b);
          REQUIRE(f.has_value() == g.has_value());
          if (f) {
            const auto [fx, fy] = level2_transport({(*f)[0], (*f)[1]}, m, TransportDirection::a_to_b);
            CHECK(Multipartition({fx, fy}) == *g);
          }
        }
      }
      CHECK(image.size() == enumerate_multipartitions(2, n).size());
    }
  }
}

TEST_CASE("wall crossing examples") {
  const auto irr = make_irrational_params({Charge{0, 0}, Charge{0, 0}});
  CHECK(wall_cross(mp({{1}, {}}), lower(0, 1, 0), irr) == mp({{}, {1}}));
  const auto three = make_irrational_params({Charge{0, 0}, Charge{0, 0}, Charge{2, 0}});
  const auto lam = mp({{}, {}, {2, 1}});
  CHECK(wall_cross(lam, lower(0, 1, 0), three) == lam);
  CHECK_THROWS_AS(wall_cross(lam, {WallDescriptor::kappa_wall(2), WallCrossStep::Direction::lower}, three),
                  UnsupportedParameter);
  CHECK_THROWS_AS(wall_cross(lam, lower(0, 1, 1), three), PreconditionError);
  CHECK_THROWS_AS(wall_cross(lam, lower(0, 0, 0), three), InputError);
}

TEST_CASE("wall crossing on rational parameters") {
  for (long e : {2L, 3L}) {
    for (long m = -3; m <= 3; ++m) {
      const auto p = make_params(make_rational(-1, e), {m, 0});
      const auto next = lowered(p, 1);
      for (int n = 0; n <= 5; ++n) {
        std::set<Multipartition> image;
        for (const auto& lam : enumerate_multipartitions(2, n)) {
          const auto w = wall_cross(lam, lower(0, 1, m), p);
          CHECK(w.size() == n);
          image.insert(w);
          CHECK(heis_q(w, next) == heis_q(lam, p));
          CHECK(km_depth(w, next) == km_depth(lam, p));
          CHECK(wall_cross(w, {WallDescriptor::charge_wall(0, 1, m), WallCrossStep::Direction::raise}, next) == lam);
          if (n > 4) continue;
          for (long v = 0; v < e; ++v) {
            const Residue z{0, v};
            const auto f = f_tilde(lam, z, p), g = f_tilde(w, z, next);
            REQUIRE(f.has_value() == g.has_value());
            if (f) CHECK(wall_cross(*f, lower(0, 1, m), p) == *g);
            const auto x = e_tilde(lam, z, p), y = e_tilde(w, z, next);
            REQUIRE(x.has_value() == y.has_value());
            if (x) CHECK(wall_cross(*x, lower(0, 1, m), p) == *y);
          }
        }
        CHECK(image.size() == enumerate_multipartitions(2, n).size());
      }
    }
  }
}

TEST_CASE("Heisenberg depth is independent of the lowering index") {
  oracle::Gen gen(41);
  for (int t = 0; t < 12; ++t) {
    const auto p = gen.params(gen.uniform(2, 3));
    for (int n = 0; n <= 4; ++n) {
      for (const auto& lam : enumerate_multipartitions(p.level(), n)) {
        const long base = heis_q(lam, p);
        for (std::size_t c = 0; c < p.classes().size(); ++c) {
          for (int j : p.classes()[c]) {
            LoweringChoice choice(p.classes().size());
            choice[c] = j;
            CHECK(heis_q(lam, p, choice) == base);
          }
        }
      }
    }
  }
}

TEST_CASE("already asymptotic parameters need no transport") {
  for (long e : {2L, 3L}) {
    const auto p = make_params(make_rational(-1, e), {0, -7});
    for (int n = 0; n <= 5; ++n)
      for (const auto& lam : enumerate_multipartitions(2, n)) CHECK(heis_q(lam, p) == asymptotic_q(lam, 1, p).q);
    const auto one = make_params(make_rational(-1, e), {0});
    for (int n = 0; n <= 8; ++n)
      for (const auto& lam : enumerate_multipartitions(1, n)) CHECK(heis_q(lam, one) == asymptotic_q(lam, 0, one).q);
  }
}

TEST_CASE("support descriptors") {
  const auto two = make_params(make_rational(-1, 2), {0});
  auto s = support(Multipartition(1), two);
  CHECK(s.p == 0);
  CHECK(s.q == 0);
  CHECK(s.finite_dimensional);
  s = support(mp({{2}}), two);
  CHECK(s.p == 0);
  CHECK(s.q == 1);
  CHECK(s.dim_support == 0);
  CHECK(s.finite_dimensional);
  CHECK(s.stabilizer.rank == 0);
  s = support(mp({{1, 1}}), two);
  CHECK(s.p == 2);
  CHECK(s.q == 0);
  CHECK(s.dim_support == 1);
  CHECK(!s.finite_dimensional);

  CHECK(heis_q(mp({{2}, {2}}), make_irrational_params({Charge{0, 0}, Charge{0, 0}})) == 0);

  oracle::Gen gen(42);
  for (int t = 0; t < 30; ++t) {
    const auto p = gen.params(gen.uniform(1, 3));
    const auto lam = gen.multipartition(p.level(), gen.uniform(0, 6));
    const auto d = support(lam, p);
    const long e = *p.e();
    CHECK(d.p + e * d.q <= lam.size());
    CHECK(d.stabilizer.rank == lam.size() - d.p - e * d.q);
    CHECK(d.finite_dimensional == (d.dim_support == 0));
    if (p.level() >= 2) CHECK(d.dim_support == d.p + d.q);
  }
}

TEST_CASE("transpose reduction for positive kappa") {
  oracle::Gen gen(43);
  for (int t = 0; t < 20; ++t) {
    const int level = gen.uniform(1, 2);
    auto p = gen.params(level);
    if (p.kappa().value() < 0) p = CherednikParams(level, p.kappa().negated(), p.charges());
    REQUIRE(p.kappa().value() > 0);
    const auto [np, flipped] = normalize_for_support(p);
    CHECK(flipped);
    for (int n = 0; n <= 4; ++n) {
      for (const auto& lam : enumerate_multipartitions(level, n)) {
        const auto a = support(lam, p), b = support(transpose(lam), np);
        CHECK(a.p == b.p);
        CHECK(a.q == b.q);
        CHECK(a.dim_support == b.dim_support);
      }
    }
  }
}
