// order.hpp - the c-function on multipartitions and the two highest weight
// orders on P_l(n).
#pragma once

#include <vector>

#include "cyclo/params.hpp"
#include "cyclo/partition.hpp"

namespace cyclo {

// c_lambda = sum of c_b over the boxes of lambda.
CValue c_lambda(const Multipartition& lambda, const CherednikParams& p);

// tau <=_c xi iff tau == xi or c_tau - c_xi is a positive integer.
bool leq_c(const Multipartition& tau, const Multipartition& xi, const CherednikParams& p);

// b <= b' iff b ~ b' and c_b - c_b' is a nonnegative integer. This is the
// sign under which the box order refines <=_c and reproduces the worked
// signature example.
bool box_leq(const Box& b, const Box& b2, const CherednikParams& p);

// Size of a maximum matching in the bipartite graph given by adjacency
// lists from the left vertices (Kuhn's augmenting paths).
int max_bipartite_matching(const std::vector<std::vector<int>>& adjacency, int right_count);

// lambda <= lambda' iff the boxes can be paired b_i <= b'_i.
bool preceq(const Multipartition& lambda, const Multipartition& lambda2, const CherednikParams& p);

}  // namespace cyclo
