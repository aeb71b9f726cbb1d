#include "opgb/permutations.hpp"

#include <algorithm>
#include <numeric>

namespace opgb {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

bool Permutation::is_valid() const {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > size() || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

namespace {

void check_block_sizes(const std::vector<int>& block_sizes) {
  if (block_sizes.empty())
    throw std::invalid_argument("shuffle permutations: no blocks given");
  for (int k : block_sizes)
    if (k < 1) throw std::invalid_argument("shuffle permutations: block sizes must be positive");
}

// Fills images back to front. remaining[i] slots are still open in block i;
// the current maximum image goes to the last open slot of a block whose open
// part has size > 1, or to the lead slot of the last non-empty block.
void generate(const std::vector<int>& offsets, std::vector<int>& remaining, int value,
              std::vector<int>& images, std::vector<Permutation>& out) {
  if (value == 0) {
    out.push_back(Permutation{images});
    return;
  }
  int last_nonempty = -1;
  for (size_t i = 0; i < remaining.size(); ++i)
    if (remaining[i] > 0) last_nonempty = static_cast<int>(i);
  for (size_t i = 0; i < remaining.size(); ++i) {
    if (remaining[i] == 0) continue;
    if (remaining[i] == 1 && static_cast<int>(i) != last_nonempty) continue;
    int slot = offsets[i] + remaining[i] - 1;  // 0-based position
    --remaining[i];
    images[slot] = value;
    generate(offsets, remaining, value - 1, images, out);
    ++remaining[i];
  }
}

}  // namespace

std::vector<Permutation> shuffle_permutations(const std::vector<int>& block_sizes) {
  check_block_sizes(block_sizes);
  int total = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  std::vector<int> offsets(block_sizes.size());
  for (size_t i = 1; i < block_sizes.size(); ++i)
    offsets[i] = offsets[i - 1] + block_sizes[i - 1];
  std::vector<int> remaining = block_sizes;
  std::vector<int> images(total);
  std::vector<Permutation> out;
  generate(offsets, remaining, total, images, out);
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class count_shuffle_permutations(const std::vector<int>& block_sizes) {
  check_block_sizes(block_sizes);
  int total = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);

  mpz_class numerator = 1;
  for (int k : block_sizes) numerator *= k;
  mpz_class multinomial;  // total! / (k1! ... kn!)
  mpz_fac_ui(multinomial.get_mpz_t(), total);
  for (int k : block_sizes) {
    mpz_class kf;
    mpz_fac_ui(kf.get_mpz_t(), k);
    mpz_divexact(multinomial.get_mpz_t(), multinomial.get_mpz_t(), kf.get_mpz_t());
  }
  numerator *= multinomial;

  mpz_class denominator = 1;
  int tail = total;
  for (int k : block_sizes) {
    denominator *= tail;
    tail -= k;
  }
  mpz_class count;
  mpz_divexact(count.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return count;
}

bool is_shuffle_permutation(const Permutation& sigma, const std::vector<int>& block_sizes) {
  check_block_sizes(block_sizes);
  int total = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  if (sigma.size() != total || !sigma.is_valid()) return false;
  int offset = 0;
  int previous_lead = 0;
  for (int k : block_sizes) {
    if (sigma.images[offset] < previous_lead) return false;
    previous_lead = sigma.images[offset];
    for (int j = 1; j < k; ++j)
      if (sigma.images[offset + j] < sigma.images[offset + j - 1]) return false;
    offset += k;
  }
  return true;
}

Permutation inverse(const Permutation& sigma) {
  Permutation out;
  out.images.resize(sigma.size());
  for (int i = 1; i <= sigma.size(); ++i) out.images[sigma(i) - 1] = i;
  return out;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  Permutation out;
  out.images.resize(tau.size());
  for (int i = 1; i <= tau.size(); ++i) out.images[i - 1] = sigma(tau(i));
  return out;
}

}  // namespace opgb
