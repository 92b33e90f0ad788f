#include "doctest.h"
#include "oracles.hpp"

#include "cyclo/errors.hpp"
#include "cyclo/partition.hpp"

using namespace cyclo;

namespace {

Multipartition mp(std::vector<Partition> c) { return Multipartition(std::move(c)); }

}  // namespace

TEST_CASE("enumerate small multipartitions") {
  auto one = enumerate_multipartitions(1, 0);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Multipartition(1));
  CHECK(enumerate_multipartitions(1, 4).size() == 5);

  const std::vector<Multipartition> expect = {mp({{2}, {}}), mp({{1, 1}, {}}), mp({{1}, {1}}),
                                              mp({{}, {2}}), mp({{}, {1, 1}})};
  CHECK(enumerate_multipartitions(2, 2) == expect);
}

TEST_CASE("multipartition counts agree with the partition-count recursion") {
  for (int level = 1; level <= 3; ++level) {
    for (int n = 0; n <= 8; ++n) {
      const auto all = enumerate_multipartitions(level, n);
      CHECK(static_cast<long>(all.size()) == oracle::multipartition_count(level, n));
      CHECK(count_multipartitions(level, n) == oracle::multipartition_count(level, n));
      CHECK(std::is_sorted(all.begin(), all.end()));
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
  }
}

TEST_CASE("addable and removable boxes") {
  const Multipartition empty(1);
  CHECK(addable_boxes(empty) == std::vector<Box>{{1, 1, 0}});
  CHECK(removable_boxes(empty).empty());

  const Partition p{2, 2};
  CHECK(removable_boxes(p) == std::vector<Box>{{2, 2, 0}});
  CHECK(addable_boxes(p) == std::vector<Box>{{3, 1, 0}, {1, 3, 0}});

  const auto lam = mp({{2, 2}, {3, 1, 1, 1}});
  CHECK(removable_boxes(lam) == std::vector<Box>{{2, 2, 0}, {3, 1, 1}, {1, 4, 1}});
}

TEST_CASE("add and remove boxes") {
  CHECK(add_box(Multipartition(1), {1, 1, 0}) == mp({{1}}));
  const auto lam = mp({{2, 2}, {3, 1, 1, 1}});
  CHECK(remove_box(lam, {1, 4, 1}) == mp({{2, 2}, {3, 1, 1}}));
  CHECK(add_box(lam, {3, 1, 0}) == mp({{3, 2}, {3, 1, 1, 1}}));
  CHECK_THROWS_AS(add_box(lam, {2, 2, 0}), InvalidMove);
  CHECK_THROWS_AS(remove_box(lam, {1, 1, 0}), InvalidMove);
  CHECK_THROWS_AS(add_box(lam, {1, 1, 5}), InvalidMove);
}

TEST_CASE("box invariants on random multipartitions") {
  oracle::Gen gen(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int level = gen.uniform(1, 3);
    const auto lam = gen.multipartition(level, gen.uniform(0, 10));
    const auto add = addable_boxes(lam);
    const auto rem = removable_boxes(lam);
    CHECK(add.size() == rem.size() + level);
    for (const Box& b : add) {
      CHECK(std::find(rem.begin(), rem.end(), b) == rem.end());
      const auto bigger = add_box(lam, b);
      CHECK(bigger.size() == lam.size() + 1);
      CHECK(remove_box(bigger, b) == lam);
    }
    for (const Box& b : rem) CHECK(add_box(remove_box(lam, b), b) == lam);
  }
}

TEST_CASE("transpose") {
  CHECK(transpose(Multipartition(2)) == Multipartition(2));
  CHECK(transpose(mp({{2, 1}})) == mp({{2, 1}}));
  CHECK(transpose(mp({{3}, {1, 1}})) == mp({{1, 1, 1}, {2}}));
  oracle::Gen gen(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto lam = gen.multipartition(gen.uniform(1, 3), gen.uniform(0, 12));
    CHECK(transpose(transpose(lam)) == lam);
    CHECK(transpose(lam).size() == lam.size());
    std::vector<Box> swapped;
    for (const Box& b : addable_boxes(lam)) swapped.push_back({b.y, b.x, b.comp});
    std::sort(swapped.begin(), swapped.end());
    auto actual = addable_boxes(transpose(lam));
    std::sort(actual.begin(), actual.end());
    CHECK(actual == swapped);
  }
}

TEST_CASE("division with remainder examples") {
  auto d = divide_with_remainder({7, 3, 1}, 3);
  CHECK(d.quotient == Partition{1});
  CHECK(d.remainder == Partition{4, 3, 1});
  d = divide_with_remainder(Partition(), 3);
  CHECK(d.quotient.empty());
  CHECK(d.remainder.empty());
  d = divide_with_remainder({5, 2}, 2);
  CHECK(d.quotient == Partition{2, 1});
  CHECK(d.remainder == Partition{1});
  CHECK_THROWS_AS(divide_with_remainder({3}, 1), InputError);
}

TEST_CASE("division with remainder matches exhaustive maximization") {
  for (int e = 2; e <= 4; ++e) {
    for (int n = 0; n <= 12; ++n) {
      for (const auto& nu : enumerate_partitions(n)) {
        const auto d = divide_with_remainder(nu, e);
        const auto [q, r] = oracle::brute_division(nu, e);
        CHECK(d.quotient == q);
        CHECK(d.remainder == r);
        CHECK(scale(d.quotient, e) + d.remainder == nu);
      }
    }
  }
}

namespace {

std::vector<std::pair<Partition, int>> moves(const Partition& nu, int r, RibbonDirection dir) {
  std::vector<std::pair<Partition, int>> out;
  for (const auto& m : ribbon_moves(nu, r, dir)) out.emplace_back(m.result, m.sign());
  return out;
}

// Independent abacus computation: move one bead r places in a long
// beta-number set and count the beads it passes.
std::map<Partition, int> abacus(const Partition& nu, int r, bool add) {
  const int len = nu.length() + r + 2;
  std::set<int> beads;
  for (int k = 1; k <= len; ++k) beads.insert(nu.part(k) - k + len);
  std::map<Partition, int> out;
  for (int b : beads) {
    const int t = add ? b + r : b - r;
    if (t < 0 || beads.count(t)) continue;
    int passed = 0;
    for (int c : beads) passed += c > std::min(b, t) && c < std::max(b, t);
    std::set<int> moved = beads;
    moved.erase(b);
    moved.insert(t);
    std::vector<int> sorted(moved.rbegin(), moved.rend());
    std::vector<int> parts;
    for (int k = 1; k <= len; ++k) parts.push_back(sorted[k - 1] + k - len);
    out[Partition(parts)] = passed % 2 ? -1 : 1;
  }
  return out;
}

}  // namespace

TEST_CASE("ribbon move examples") {
  using V = std::vector<std::pair<Partition, int>>;
  CHECK(moves(Partition(), 3, RibbonDirection::add) ==
        V{{Partition{3}, 1}, {Partition{2, 1}, -1}, {Partition{1, 1, 1}, 1}});
  CHECK(moves(Partition{1}, 2, RibbonDirection::add) == V{{Partition{3}, 1}, {Partition{1, 1, 1}, -1}});
  CHECK(moves(Partition(), 2, RibbonDirection::remove).empty());
}

TEST_CASE("ribbon moves agree with the abacus and invert each other") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& nu : enumerate_partitions(n)) {
      for (int r = 1; r <= 6; ++r) {
        for (bool add : {true, false}) {
          const auto dir = add ? RibbonDirection::add : RibbonDirection::remove;
          std::map<Partition, int> got;
          for (const auto& m : ribbon_moves(nu, r, dir)) got[m.result] = m.sign();
          CHECK(got == abacus(nu, r, add));
          for (const auto& m : ribbon_moves(nu, r, dir)) {
            const auto back = ribbon_moves(m.result, r, add ? RibbonDirection::remove : RibbonDirection::add);
            auto it = std::find_if(back.begin(), back.end(), [&](const RibbonMove& x) { return x.result == nu; });
            REQUIRE(it != back.end());
            CHECK(it->height == m.height);
          }
        }
      }
    }
  }
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({1, 2}), InputError);
  CHECK_THROWS_AS(Partition({2, -1}), InputError);
  CHECK(Partition({3, 1, 0, 0}) == Partition{3, 1});
  CHECK(to_string(Multipartition({Partition{7, 3, 1}, Partition{2}})) == "[[7,3,1],[2]]");
  CHECK(to_string(Multipartition(1)) == "[[]]");
}
