#pragma once

#include <vector>

namespace iet {

// Permutation of {1..n} in one-line image notation: image[i-1] = tau(i).
class Permutation {
 public:
  // Throws DomainError unless image is a bijection of [n] with n >= 2.
  explicit Permutation(std::vector<int> image);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i - 1]; }  // tau(i), 1-based
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.image_ == b.image_;
  }

 private:
  std::vector<int> image_;
};

// Combinatorial classification of a permutation:
//   irreducible:  tau({1..j}) != {1..j} for every j < n;
//   split:        tau(j+1) != tau(j)+1 for every j < n;
//   fully_split:  split, and tau(1) != tau(n)+1 and tau^-1(1) != tau^-1(n)+1.
// Split means the exchange is discontinuous at every breakpoint; the two
// extra conditions exclude the endpoint coincidences T0 = dual(T)1 and
// T^-1 0 = dual(T)^-1 1.
struct PermutationClass {
  bool irreducible = false;
  bool split = false;
  bool fully_split = false;
};

PermutationClass classify_permutation(const Permutation& p);

}  // namespace iet
