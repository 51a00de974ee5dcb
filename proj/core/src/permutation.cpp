#include "iet/permutation.hpp"

#include <algorithm>
#include <string>

#include "iet/errors.hpp"

namespace iet {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  if (n < 2) throw DomainError("permutation needs n >= 2");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : image_) {
    if (v < 1 || v > n) {
      throw DomainError("permutation image value " + std::to_string(v) +
                        " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      throw DomainError("permutation image repeats " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 1; i <= size(); ++i) {
    inv[static_cast<std::size_t>(image_[i - 1] - 1)] = i;
  }
  return Permutation(std::move(inv));
}

PermutationClass classify_permutation(const Permutation& p) {
  const int n = p.size();
  PermutationClass out;

  // tau({1..j}) == {1..j} iff max(tau(1..j)) == j.
  out.irreducible = true;
  int running_max = 0;
  for (int j = 1; j < n; ++j) {
    running_max = std::max(running_max, p(j));
    if (running_max == j) {
      out.irreducible = false;
      break;
    }
  }

  out.split = true;
  for (int j = 1; j < n; ++j) {
    if (p(j + 1) == p(j) + 1) {
      out.split = false;
      break;
    }
  }

  const Permutation inv = p.inverse();
  out.fully_split = out.split && p(1) != p(n) + 1 && inv(1) != inv(n) + 1;
  return out;
}

}  // namespace iet
