// heisenberg.hpp - the sl_infinity (Heisenberg) crystal statistic q, level-2
// wall-crossing transport and support descriptors of simple modules.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyclo/params.hpp"
#include "cyclo/partition.hpp"

namespace cyclo {

struct AsymptoticQ {
  long q = 0;
  Partition quotient;   // nu'
  Partition remainder;  // nu''
};

// Requires s_j < s_i - |lambda| for every i != j (rational kappa); the
// component lambda^(j) is divided with remainder by e.
AsymptoticQ asymptotic_q(const Multipartition& lambda, int j, const CherednikParams& p);

// lambda with lambda^(j) replaced by e * (e~_content nu') + nu'', where e~ is
// the sl_infinity operator on plain partitions (content x - y).
std::optional<Multipartition> heis_e_asymptotic(const Multipartition& lambda, int j, long content,
                                                const CherednikParams& p);

using PartitionPair = std::pair<Partition, Partition>;

// Side a: charges (m, 0), so among boxes of equal content the second
// component is read first. Side b: charges (m, 1/kappa), first component
// read first. kappa is symbolic throughout.
enum class TransportDirection { a_to_b, b_to_a };

PartitionPair level2_transport(const PartitionPair& pair, long m, TransportDirection dir);

struct WallCrossStep {
  enum class Direction { lower, raise };
  WallDescriptor wall;  // charge_difference kind
  Direction direction = Direction::lower;
};

// Transports the pair (lambda^(i), lambda^(j)) across the wall; "lower" moves
// s_j down through s_i - s_j = m, i.e. side a to side b.
Multipartition wall_cross(const Multipartition& lambda, const WallCrossStep& step,
                          const CherednikParams& p);

// The parameters reached by one lowering step of component j: s_j + 1/kappa.
CherednikParams lowered(const CherednikParams& p, int j);

// Per class, the component whose charge is lowered to reach the asymptotic
// chamber. Missing entries default to the largest member of the class.
using LoweringChoice = std::vector<std::optional<int>>;

// Depth in the Heisenberg crystal: zero for irrational kappa, computed via the
// transpose reduction for kappa > 0.
long heis_q(const Multipartition& lambda, const CherednikParams& p,
            const LoweringChoice& choice = {});

struct Stabilizer {
  int level = 1;      // G(level, 1, rank)
  long rank = 0;
  long e = 0;         // Sym_e^q; 0 for irrational kappa
  long q = 0;
};

struct SupportDescriptor {
  long p = 0;
  long q = 0;
  Stabilizer stabilizer;
  long dim_support = 0;
  bool finite_dimensional = false;
};

SupportDescriptor support(const Multipartition& lambda, const CherednikParams& p);

}  // namespace cyclo
