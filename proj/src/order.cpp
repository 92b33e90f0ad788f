// order.cpp
#include "cyclo/order.hpp"

#include <functional>

namespace cyclo {

CValue c_lambda(const Multipartition& lambda, const CherednikParams& p) {
  CValue total{0, 0};
  for (const Box& b : boxes(lambda)) total = total + c_of_box(b, p);
  return total;
}

bool leq_c(const Multipartition& tau, const Multipartition& xi, const CherednikParams& p) {
  if (tau == xi) return true;
  auto diff = p.integral_value(c_lambda(tau, p) - c_lambda(xi, p));
  return diff && *diff > 0;
}

bool box_leq(const Box& b, const Box& b2, const CherednikParams& p) {
  if (!box_equivalent(b, b2, p)) return false;
  auto diff = p.integral_value(c_of_box(b, p) - c_of_box(b2, p));
  return diff && *diff >= 0;
}

int max_bipartite_matching(const std::vector<std::vector<int>>& adjacency, int right_count) {
  std::vector<int> match_right(right_count, -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int left) {
    for (int r : adjacency[left]) {
      if (visited[r]) continue;
      visited[r] = 1;
      if (match_right[r] < 0 || augment(match_right[r])) {
        match_right[r] = left;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int left = 0; left < static_cast<int>(adjacency.size()); ++left) {
    visited.assign(right_count, 0);
    if (augment(left)) ++matched;
  }
  return matched;
}

bool preceq(const Multipartition& lambda, const Multipartition& lambda2, const CherednikParams& p) {
  if (lambda.size() != lambda2.size()) return false;
  const auto left = boxes(lambda);
  const auto right = boxes(lambda2);
  std::vector<std::vector<int>> adjacency(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (box_leq(left[i], right[j], p)) adjacency[i].push_back(static_cast<int>(j));
    }
  }
  return max_bipartite_matching(adjacency, static_cast<int>(right.size())) ==
         static_cast<int>(left.size());
}

}  // namespace cyclo
