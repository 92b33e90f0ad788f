#include "doctest.h"
#include "oracles.hpp"

#include "cyclo/order.hpp"

using namespace cyclo;

namespace {

Multipartition mp(std::vector<Partition> c) { return Multipartition(std::move(c)); }

Rational c_sum(const Multipartition& lam, const CherednikParams& p) {
  // sum over boxes of kappa*l*(x - y) + l*h_i, written out directly
  Rational out = 0;
  const Rational k = p.kappa().value();
  const int l = p.level();
  for (int i = 0; i < lam.level(); ++i) {
    const Rational hi = k * p.collapse(p.s(i)) - make_rational(i, l);
    for (int y = 1; y <= lam[i].length(); ++y)
      for (int x = 1; x <= lam[i].part(y); ++x) out += k * l * (x - y) + l * hi;
  }
  return out;
}

}  // namespace

TEST_CASE("c-function on multipartitions") {
  const auto one = make_params(make_rational(-1, 2), {0});
  const auto two = make_params(make_rational(-1, 2), {0, -1});
  CHECK(one.evaluate(c_lambda(Multipartition(1), one)) == 0);
  CHECK(two.evaluate(c_lambda(mp({{2, 2}, {3, 1, 1, 1}}), two)) == 3);
  CHECK(one.evaluate(c_lambda(mp({{2}}), one)) == make_rational(-1, 2));

  oracle::Gen gen(21);
  for (int t = 0; t < 100; ++t) {
    const auto p = gen.params(gen.uniform(1, 3));
    const auto lam = gen.multipartition(p.level(), gen.uniform(0, 9));
    CHECK(p.evaluate(c_lambda(lam, p)) == c_sum(lam, p));
  }
}

TEST_CASE("order on c-values") {
  const auto one = make_params(make_rational(-1, 2), {0});
  CHECK(leq_c(mp({{3}}), mp({{3}}), one));
  CHECK(leq_c(mp({{1, 1}}), mp({{2}}), one));
  CHECK(!leq_c(mp({{2}}), mp({{1, 1}}), one));
}

TEST_CASE("order on boxes") {
  const auto one = make_params(make_rational(-1, 2), {0});
  CHECK(box_leq({2, 1, 0}, {2, 1, 0}, one));
  // box (1,2) of (1,1) has c = 1/2; box (2,1) of (2) has c = -1/2
  CHECK(box_leq({1, 2, 0}, {2, 1, 0}, one));
  CHECK(!box_leq({2, 1, 0}, {1, 2, 0}, one));
  // c-difference 1/2 is not an integer
  const auto third = make_params(make_rational(-1, 4), {0});
  CHECK(!box_leq({1, 1, 0}, {3, 1, 0}, third));
}

TEST_CASE("box-matching order examples") {
  const auto one = make_params(make_rational(-1, 2), {0});
  CHECK(preceq(mp({{2, 1}}), mp({{2, 1}}), one));
  CHECK(preceq(mp({{1, 1}}), mp({{2}}), one));
  CHECK(!preceq(mp({{2}}), mp({{1, 1}}), one));
  CHECK(!preceq(mp({{2}}), mp({{1}}), one));
}

TEST_CASE("matching agrees with exhaustive permutation search") {
  oracle::Gen gen(22);
  for (int t = 0; t < 60; ++t) {
    const auto p = gen.params(gen.uniform(1, 2));
    const int n = gen.uniform(0, 5);
    const auto all = enumerate_multipartitions(p.level(), n);
    for (int k = 0; k < 8; ++k) {
      const auto& a = all[gen.uniform(0, static_cast<int>(all.size()) - 1)];
      const auto& b = all[gen.uniform(0, static_cast<int>(all.size()) - 1)];
      const bool brute = oracle::permutation_matching(
          boxes(a), boxes(b), [&](const Box& x, const Box& y) { return box_leq(x, y, p); });
      CHECK(preceq(a, b, p) == brute);
    }
  }
}

TEST_CASE("matching size") {
  CHECK(max_bipartite_matching({{0, 1}, {0}, {}}, 2) == 2);
  CHECK(max_bipartite_matching({{0}, {0}}, 1) == 1);
  CHECK(max_bipartite_matching({}, 0) == 0);
}

TEST_CASE("box-matching order refines the c-order, and is a preorder") {
  oracle::Gen gen(23);
  for (int t = 0; t < 12; ++t) {
    const auto p = gen.params(gen.uniform(1, 2));
    for (int n = 0; n <= 4; ++n) {
      const auto all = enumerate_multipartitions(p.level(), n);
      for (const auto& a : all) {
        CHECK(preceq(a, a, p));
        for (const auto& b : all) {
          if (!preceq(a, b, p)) continue;
          CHECK(leq_c(a, b, p));
          for (const auto& c : all)
            if (preceq(b, c, p)) CHECK(preceq(a, c, p));
        }
      }
    }
  }
}

TEST_CASE("box-matching order is antisymmetric for generic parameters") {
  // irrational kappa with charges far apart
  const std::vector<CherednikParams> generic = {
      make_irrational_params({Charge{0, 0}}),
      make_irrational_params({Charge{0, 0}, Charge{make_rational(1, 2), 0}}),
      make_irrational_params({Charge{0, 0}, Charge{7, 0}})};
  for (const auto& p : generic) {
    for (int n = 0; n <= 5; ++n) {
      const auto all = enumerate_multipartitions(p.level(), n);
      for (const auto& a : all)
        for (const auto& b : all)
          if (a != b && preceq(a, b, p)) CHECK(!preceq(b, a, p));
    }
  }
}
