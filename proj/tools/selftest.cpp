// selftest.cpp
#include "selftest.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cyclo/crystal.hpp"
#include "cyclo/fock.hpp"
#include "cyclo/heisenberg.hpp"
#include "cyclo/order.hpp"

namespace cyclo::cli {

namespace {

// Empty string on success, otherwise a description of the first failure.
using Check = std::function<std::string()>;

std::vector<CherednikParams> sample_params() {
  return {make_params(make_rational(-1, 2), {0}),
          make_params(make_rational(-1, 3), {0}),
          make_params(make_rational(-1, 2), {0, -1}),
          make_params(make_rational(-1, 3), {0, 1}),
          make_params(make_rational(-2, 3), {0, 2}),
          CherednikParams(2, Kappa::rational(make_rational(-1, 2)),
                          {Charge{0, 0}, Charge{make_rational(1, 3), 0}})};
}

std::vector<Residue> all_residues(const CherednikParams& p, int n) {
  return residues_up_to(p.level(), n, p);
}

std::string golden() {
  const auto p = make_params(make_rational(-1, 2), {0, -1});
  const Multipartition lambda({Partition{2, 2}, Partition{3, 1, 1, 1}});
  const Residue z{0, 0};
  const Signature sig = z_signature(lambda, z, p);
  if (sig.word() != "++-+-") return "signature " + sig.word();
  if (reduce_signature(sig).word() != "++-") return "reduced signature";
  auto e = e_tilde(lambda, z, p);
  auto f = f_tilde(lambda, z, p);
  if (!e || *e != Multipartition({Partition{2, 2}, Partition{3, 1, 1}})) return "e~";
  if (!f || *f != Multipartition({Partition{3, 2}, Partition{3, 1, 1, 1}})) return "f~";
  return {};
}

std::string crystal_axioms(int n_max) {
  for (const auto& p : sample_params()) {
    for (int n = 0; n <= n_max; ++n) {
      for (const auto& lambda : enumerate_multipartitions(p.level(), n)) {
        for (const Residue& z : all_residues(p, n)) {
          if (auto mu = f_tilde(lambda, z, p)) {
            if (mu->size() != n + 1) return "f~ size at " + to_string(lambda);
            auto back = e_tilde(*mu, z, p);
            if (!back || *back != lambda) return "e~ f~ != id at " + to_string(lambda);
          }
          if (auto mu = e_tilde(lambda, z, p)) {
            auto back = f_tilde(*mu, z, p);
            if (!back || *back != lambda) return "f~ e~ != id at " + to_string(lambda);
          }
        }
      }
    }
  }
  return {};
}

std::string level_one_singular(int n_max) {
  for (int e : {2, 3}) {
    const auto p = make_params(make_rational(-1, e), {0});
    for (int n = 0; n <= n_max; ++n) {
      for (const auto& lambda : enumerate_multipartitions(1, n)) {
        bool divisible = true;
        for (int part : lambda[0].parts()) divisible = divisible && part % e == 0;
        if (divisible != is_singular(lambda, p)) return to_string(lambda);
      }
    }
  }
  return {};
}

std::string division(int n_max) {
  for (int e = 2; e <= 4; ++e) {
    for (int n = 0; n <= n_max; ++n) {
      for (const auto& nu : enumerate_partitions(n)) {
        const Division d = divide_with_remainder(nu, e);
        if (scale(d.quotient, e) + d.remainder != nu) return "reconstruction " + to_string(nu);
        for (int i = 1; i <= d.remainder.length(); ++i) {
          if (d.remainder.part(i) - d.remainder.part(i + 1) >= e) return "remainder " + to_string(nu);
        }
      }
    }
  }
  return {};
}

std::string heisenberg(int degree) {
  for (int e : {2, 3}) {
    for (int level : {1, 2}) {
      const auto p = level == 1 ? make_params(make_rational(-1, e), {0})
                                : make_params(make_rational(-1, e), {0, 1});
      for (int d = 1; d * e <= degree; ++d) {
        for (int n = 0; n + d * e <= degree; ++n) {
          for (const auto& lambda : enumerate_multipartitions(level, n)) {
            const FockVector v = FockVector::basis(lambda, degree);
            const FockVector up = b_plus_op(v, d, p);
            if (up != b_plus_op(v, d, p, HeisenbergModel::wedge)) return "models differ on B+";
            const FockVector comm = b_minus_op(up, d, p) - b_plus_op(b_minus_op(v, d, p), d, p);
            if (comm != Rational(d * e * level) * v) return "commutator at " + to_string(lambda);
            for (const Residue& z : all_residues(p, n + d * e)) {
              if (n + d * e < degree &&
                  f_z_op(up, z, p) != b_plus_op(f_z_op(v, z, p), d, p))
                return "[f, B] at " + to_string(lambda);
              if (e_z_op(up, z, p) != b_plus_op(e_z_op(v, z, p), d, p))
                return "[e, B] at " + to_string(lambda);
            }
          }
        }
      }
    }
  }
  return {};
}

std::string plethysm_ribbons(int max_mu) {
  for (int e : {2, 3}) {
    const auto p = make_params(make_rational(-1, e), {0});
    for (int k = 1; k <= max_mu; ++k) {
      for (const auto& mu : enumerate_partitions(k)) {
        const int bound = e * k;
        const FockVector v = plethysm_class(mu, e, bound);
        for (const Residue& z : all_residues(p, bound)) {
          if (!e_z_op(v, z, p).is_zero()) return "e_z kills s_mu[p_e] fails";
        }
        for (int d = 1; d <= k; ++d) {
          FockVector expect(1, bound);
          for (const auto& mv : ribbon_moves(mu, d, RibbonDirection::remove))
            expect += Rational(e * mv.sign()) * plethysm_class(mv.result, e, bound);
          if (b_minus_op(v, d, p) != expect) return "B_-d on s_" + to_string(mu);
        }
      }
    }
  }
  return {};
}

std::string filtration(int n_max) {
  for (const auto& p : sample_params()) {
    for (int n = 0; n <= n_max; ++n) {
      std::vector<SupportDescriptor> sd;
      for (const auto& lambda : enumerate_multipartitions(p.level(), n)) sd.push_back(support(lambda, p));
      for (int p0 = 0; p0 <= n; ++p0) {
        for (int q0 = 0; q0 <= n; ++q0) {
          long count = 0;
          for (const auto& s : sd) count += s.p <= p0 && s.q <= q0;
          if (count != filtration_dim(p0, q0, n, p))
            return "degree " + std::to_string(n) + " p=" + std::to_string(p0) + " q=" + std::to_string(q0);
        }
      }
    }
  }
  return {};
}

std::string wall_crossing(int n_max) {
  for (int e : {2, 3}) {
    for (long m = -2; m <= 2; ++m) {
      const auto p = make_params(make_rational(-1, e), {m, 0});
      const auto next = lowered(p, 1);
      const WallCrossStep step{WallDescriptor::charge_wall(0, 1, m), WallCrossStep::Direction::lower};
      for (int n = 0; n <= n_max; ++n) {
        std::set<Multipartition> image;
        for (const auto& lambda : enumerate_multipartitions(2, n)) {
          const auto w = wall_cross(lambda, step, p);
          if (w.size() != n) return "size";
          if (heis_q(lambda, p) != heis_q(w, next)) return "q at " + to_string(lambda);
          image.insert(w);
        }
        if (image.size() != enumerate_multipartitions(2, n).size()) return "not bijective";
      }
    }
  }
  return {};
}

std::string charged_words(int n_max) {
  for (int e : {2, 3}) {
    for (int level : {1, 2}) {
      const std::vector<long> s(level, n_max + 1);
      const auto p = make_params(make_rational(-1, e), s);
      for (int n = 0; n < n_max; ++n) {
        for (const auto& lambda : enumerate_multipartitions(level, n)) {
          for (long i = 0; i < e; ++i) {
            WordSum expect;
            const FockVector image = f_z_op(FockVector::basis(lambda, n + 1), Residue{0, i}, p);
            for (const auto& [mu, c] : image.entries()) expect[embed_to_charged(mu, s)] += to_long(c);
            if (wedge_f_op(embed_to_charged(lambda, s), i, e) != expect) return "f at " + to_string(lambda);
          }
        }
      }
    }
  }
  return {};
}

std::string order_refinement(int n_max) {
  for (const auto& p : sample_params()) {
    for (int n = 0; n <= n_max; ++n) {
      const auto all = enumerate_multipartitions(p.level(), n);
      for (const auto& a : all) {
        for (const auto& b : all) {
          if (preceq(a, b, p) && !leq_c(a, b, p)) return to_string(a) + " vs " + to_string(b);
        }
      }
    }
  }
  return {};
}

std::string transpose_reduction(int n_max) {
  const std::vector<CherednikParams> positive = {make_params(make_rational(1, 2), {0}),
                                                 make_params(make_rational(1, 2), {0, 1}),
                                                 make_params(make_rational(2, 3), {0, -1})};
  for (const auto& p : positive) {
    const auto [np, flipped] = normalize_for_support(p);
    for (int n = 0; n <= n_max; ++n) {
      for (const auto& lambda : enumerate_multipartitions(p.level(), n)) {
        const auto a = support(lambda, p);
        const auto b = support(transpose(lambda), np);
        if (a.p != b.p || a.q != b.q || a.dim_support != b.dim_support) return to_string(lambda);
      }
    }
  }
  return {};
}

}  // namespace

bool run_selftest(SelftestDepth depth, std::ostream& out) {
  const bool full = depth == SelftestDepth::full;
  const std::vector<std::pair<std::string, Check>> checks = {
      {"golden signature example", golden},
      {"crystal axioms", [&] { return crystal_axioms(full ? 6 : 4); }},
      {"level-1 singular vertices", [&] { return level_one_singular(full ? 8 : 6); }},
      {"division with remainder", [&] { return division(full ? 12 : 8); }},
      {"Heisenberg relations", [&] { return heisenberg(full ? 8 : 6); }},
      {"ribbon removal on plethysm classes", [&] { return plethysm_ribbons(full ? 3 : 2); }},
      {"filtration equals crystal count", [&] { return filtration(full ? 5 : 3); }},
      {"wall crossing", [&] { return wall_crossing(full ? 4 : 3); }},
      {"charged word model", [&] { return charged_words(full ? 5 : 3); }},
      {"order refinement", [&] { return order_refinement(full ? 5 : 3); }},
      {"transpose reduction", [&] { return transpose_reduction(full ? 5 : 4); }},
  };
  bool ok = true;
  for (const auto& [name, check] : checks) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = check();
    } catch (const std::exception& ex) {
      failure = std::string("exception: ") + ex.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    out << (failure.empty() ? "ok   " : "FAIL ") << name << " (" << ms << " ms)";
    if (!failure.empty()) out << ": " << failure;
    out << "\n";
    ok = ok && failure.empty();
  }
  return ok;
}

}  // namespace cyclo::cli
