#pragma once

// Slow reference enumerations used to cross-check the library.

#include <functional>
#include <vector>

namespace brute {

// all set partitions of [n] via restricted growth strings; blocks sorted
inline std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int m) {
    if (i == n) {
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(m));
      for (int k = 0; k < n; ++k) blocks[static_cast<std::size_t>(a[k])].push_back(k + 1);
      out.push_back(blocks);
      return;
    }
    for (int b = 0; b <= m; ++b) {
      a[static_cast<std::size_t>(i)] = b;
      rec(i + 1, b == m ? m + 1 : m);
    }
  };
  if (n == 0) return {{}};
  rec(0, 0);
  return out;
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// unlabelled step sequences (dx, dy) from a set, summing to a target weight
inline void step_sequences(const std::vector<std::pair<int, int>>& steps, int target,
                           const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  std::vector<std::pair<int, int>> cur;
  std::function<void(int)> rec = [&](int sum) {
    if (sum == target) fn(cur);
    for (auto s : steps) {
      if (sum + s.first + s.second > target) continue;
      cur.push_back(s);
      rec(sum + s.first + s.second);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace brute
