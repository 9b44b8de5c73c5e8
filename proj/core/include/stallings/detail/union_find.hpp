#ifndef STALLINGS_DETAIL_UNION_FIND_HPP
#define STALLINGS_DETAIL_UNION_FIND_HPP

#include <numeric>
#include <vector>

namespace stallings::detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns the surviving representative, or -1 if already joined.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return -1;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return a;
  }

  bool joined(int a, int b) const { return find(a) == find(b); }

 private:
  mutable std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace stallings::detail

#endif
