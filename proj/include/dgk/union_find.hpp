#pragma once

#include <numeric>
#include <vector>

namespace dgk {

/// Union-find over 0..n-1 with the smallest member index as representative,
/// so class representatives are stable under insertion order.
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  /// Returns true if the two classes were distinct.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }
};

}  // namespace dgk
