#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace stonet {

/// A function between finite sets {0..domain-1} -> {0..codomain-1}.
struct FinMap {
  std::size_t codomain = 0;
  std::vector<std::size_t> images;

  std::size_t domain() const noexcept { return images.size(); }
  std::size_t operator()(std::size_t i) const { return images[i]; }

  friend bool operator==(const FinMap&, const FinMap&) = default;
};

FinMap identity_map(std::size_t n);

/// g . f
FinMap compose(const FinMap& g, const FinMap& f);

/// Elements of A x B are encoded as a * |B| + b.
inline std::size_t pair_index(std::size_t a, std::size_t b, std::size_t nb) {
  return a * nb + b;
}

FinMap first_projection(std::size_t na, std::size_t nb);
FinMap second_projection(std::size_t na, std::size_t nb);

/// Constant map from a set of size n onto the point `value` of a set of size m.
FinMap constant_map(std::size_t n, std::size_t m, std::size_t value);

/// Calls `fn(const std::vector<std::size_t>&)` for every map {0..n-1} -> {0..m-1},
/// in lexicographic order (last position varies fastest).
template <typename Fn>
void for_each_tuple(std::size_t n, std::size_t m, Fn&& fn) {
  std::vector<std::size_t> t(n, 0);
  if (n > 0 && m == 0) {
    return;
  }
  while (true) {
    fn(static_cast<const std::vector<std::size_t>&>(t));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++t[i] < m) {
        break;
      }
      t[i] = 0;
      if (i == 0) {
        return;
      }
    }
    if (n == 0) {
      return;
    }
  }
}

/// All permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> permutations(std::size_t n);

std::string to_string(const FinMap& f);

}  // namespace stonet
