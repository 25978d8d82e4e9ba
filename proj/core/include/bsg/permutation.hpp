#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bsg {

// Hard bound of the fixed-size permutation storage.
inline constexpr int kMaxN = 12;
// Default working cap: validators and sweeps allocate Theta(n!) state,
// which stays cheap up to 10! but not much beyond.
inline constexpr int kDefaultCap = 10;

// Sequence of 1-based generator indices. Index i stands for the adjacent
// transposition of positions i and i+1, applied on the right.
using Form = std::vector<int>;

// n must be in [0, 20]; the result fits in 64 bits.
std::uint64_t factorial(int n);

// One-line permutation of {1..n}. Comparison is by n first, then
// lexicographic on the image; for equal n that is plain lex order.
class Permutation {
 public:
  Permutation() = default;

  // [1,2,...,n]; requires 2 <= n <= kMaxN.
  static Permutation identity(int n);
  // Validates that image is a bijection on {1..n}.
  static Permutation from_image(const std::vector<int>& image);

  int size() const { return n_; }
  // Value at 1-based position pos.
  int at(int pos) const { return img_[pos - 1]; }
  std::vector<int> image() const;

  // Digits concatenated for n <= 9 ("1324"), space-separated above that.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::int8_t n_ = 0;
  std::array<std::uint8_t, kMaxN> img_{};

  friend Permutation apply_gen(const Permutation& p, int i);
};

// p * b_i: swaps positions i and i+1. Requires 1 <= i <= n-1. Involutive.
Permutation apply_gen(const Permutation& p, int i);

// Left-to-right fold of apply_gen. An empty form returns p unchanged.
Permutation apply_form(Permutation p, const Form& f);

// Parity of the inversion count: 0 = even, 1 = odd.
int parity(const Permutation& p);

// Position of the image in lexicographic order of all of S_n, 0-based.
std::uint64_t lex_rank(const Permutation& p);

// Inverse of lex_rank. Requires r < n!.
Permutation lex_unrank(int n, std::uint64_t r);

// Cyclic Gray-code form of length n!: applied to any start permutation it
// traces a closed walk visiting all n! vertices exactly once. For n == 2 the
// result is [1, 1], which repeats an index cyclically; that is the only size
// where the walk cannot avoid consecutive repeats (the graph is a single
// edge), and callers treating forms as repeat-free must special-case it.
Form sjt_cycle(int n);

}  // namespace bsg
