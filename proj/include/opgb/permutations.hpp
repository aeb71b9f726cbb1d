#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace opgb {

// A permutation of {1..n} stored as its list of images: images[i-1] = sigma(i).
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> imgs) : images(std::move(imgs)) {}

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i - 1]; }  // 1-based
  bool is_valid() const;                                 // bijection on {1..n}

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& other) const { return images < other.images; }
};

// All shuffle permutations of the given block type: order-preserving on each
// block of consecutive inputs, with the images of the block leads increasing.
// Returned sorted lexicographically by image list. Throws on empty input or
// non-positive block sizes.
std::vector<Permutation> shuffle_permutations(const std::vector<int>& block_sizes);

// Number of shuffle permutations of the given type, in exact integer
// arithmetic:  (k1...kn) / ((k1+..+kn)(k2+..+kn)...kn) * (k1+..+kn)! / (k1!...kn!).
mpz_class count_shuffle_permutations(const std::vector<int>& block_sizes);

bool is_shuffle_permutation(const Permutation& sigma, const std::vector<int>& block_sizes);

// Places items[i-1] at position sigma(i): the "pair with images, sort, strip"
// idiom. Throws when the lengths disagree.
template <typename T>
std::vector<T> reorder_by_images(const Permutation& sigma, const std::vector<T>& items) {
  if (sigma.size() != static_cast<int>(items.size()))
    throw std::invalid_argument("reorder_by_images: length mismatch");
  std::vector<T> out(items.size());
  for (size_t i = 0; i < items.size(); ++i) out[sigma.images[i] - 1] = items[i];
  return out;
}

// Helpers for tests; the engine never composes or inverts permutations.
Permutation inverse(const Permutation& sigma);
Permutation compose(const Permutation& sigma, const Permutation& tau);  // sigma after tau

}  // namespace opgb
