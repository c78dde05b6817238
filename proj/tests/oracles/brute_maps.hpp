#pragma once

// Connected maps with m edges by brute force: every rotation sigma on darts
// 1..2m with alpha = (1 2)(3 4)..., reduced modulo relabellings that respect
// alpha and modulo reflection (sigma -> sigma^-1).

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "ribbon/ribbon_graph.hpp"

namespace oracle {

struct BruteMaps {
  std::set<std::vector<int>> plane;  // minimal encodings
  std::set<std::vector<int>> all;
  std::vector<ribbon::RibbonGraph> samples;  // one map per class of `all`
};

inline int count_cycles(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = true;
  }
  return c;
}

inline ribbon::RibbonGraph to_map(const std::vector<int>& s) {
  const auto n = s.size();
  std::vector<ribbon::Vertex> vertices;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ribbon::Vertex v{"w" + std::to_string(vertices.size()), {}};
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(s[j])) {
      seen[j] = true;
      v.rotation.push_back(static_cast<ribbon::Dart>(j) + 1);
    }
    vertices.push_back(std::move(v));
  }
  std::vector<ribbon::Edge> edges;
  for (std::size_t e = 0; e < n / 2; ++e) {
    edges.push_back({"e" + std::to_string(e), static_cast<ribbon::Dart>(2 * e + 1), static_cast<ribbon::Dart>(2 * e + 2)});
  }
  return ribbon::RibbonGraph(std::move(vertices), std::move(edges));
}

inline BruteMaps brute_connected_maps(int m) {
  const auto n = static_cast<std::size_t>(2 * m);
  std::vector<int> alpha(n);
  for (std::size_t i = 0; i < n; ++i) alpha[i] = static_cast<int>(i ^ 1U);

  std::vector<std::vector<int>> group;
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int flips = 0; flips < (1 << m); ++flips) {
      std::vector<int> pi(n);
      for (int e = 0; e < m; ++e) {
        const int f = (flips >> e) & 1;
        pi[static_cast<std::size_t>(2 * e)] = 2 * perm[static_cast<std::size_t>(e)] + f;
        pi[static_cast<std::size_t>(2 * e + 1)] = 2 * perm[static_cast<std::size_t>(e)] + 1 - f;
      }
      group.push_back(std::move(pi));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  BruteMaps out;
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 0);
  do {
    // connectivity under <sigma, alpha>
    std::vector<bool> reach(n, false);
    std::vector<std::size_t> stack{0};
    reach[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (int y : {s[x], alpha[x]}) {
        if (!reach[static_cast<std::size_t>(y)]) {
          reach[static_cast<std::size_t>(y)] = true;
          ++count;
          stack.push_back(static_cast<std::size_t>(y));
        }
      }
    }
    if (count != n) continue;
    std::vector<int> phi(n), sinv(n);
    for (std::size_t i = 0; i < n; ++i) {
      phi[i] = alpha[static_cast<std::size_t>(s[i])];
      sinv[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
    }
    const bool plane = count_cycles(s) - m + count_cycles(phi) == 2;
    std::vector<int> best;
    for (const auto& pi : group) {
      for (const auto* q : {&s, &sinv}) {
        std::vector<int> c(n);
        for (std::size_t i = 0; i < n; ++i) c[static_cast<std::size_t>(pi[i])] = pi[static_cast<std::size_t>((*q)[i])];
        if (best.empty() || c < best) best = c;
      }
    }
    if (out.all.insert(best).second) out.samples.push_back(to_map(s));
    if (plane) out.plane.insert(best);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

}  // namespace oracle
