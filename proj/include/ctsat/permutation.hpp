#pragma once

#include <stdexcept>
#include <vector>

namespace ctsat {

// A bijection on the n variables. order[i] is the variable at position i;
// pos_of(v) is the inverse.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> order) : order_(std::move(order)) {
    pos_.assign(order_.size(), -1);
    for (size_t i = 0; i < order_.size(); ++i) {
      int v = order_[i];
      if (v < 0 || v >= static_cast<int>(order_.size()) || pos_[v] != -1)
        throw std::invalid_argument("permutation is not a bijection");
      pos_[v] = static_cast<int>(i);
    }
  }

  static Permutation identity(int n) {
    std::vector<int> o(n);
    for (int i = 0; i < n; ++i) o[i] = i;
    return Permutation(std::move(o));
  }

  int size() const { return static_cast<int>(order_.size()); }
  int at(int position) const { return order_[position]; }
  int pos_of(int var) const { return pos_[var]; }
  const std::vector<int>& order() const { return order_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> order_;
  std::vector<int> pos_;
};

}  // namespace ctsat
