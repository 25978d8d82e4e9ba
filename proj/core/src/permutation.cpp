#include "bsg/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsg {

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial: n must be in [0, 20]");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

Permutation Permutation::identity(int n) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("identity: n must be in [2, 12]");
  Permutation p;
  p.n_ = static_cast<std::int8_t>(n);
  for (int i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Permutation Permutation::from_image(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  if (n < 2 || n > kMaxN) throw std::invalid_argument("from_image: size must be in [2, 12]");
  bool seen[kMaxN + 1] = {};
  Permutation p;
  p.n_ = static_cast<std::int8_t>(n);
  for (int i = 0; i < n; ++i) {
    const int v = image[i];
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("from_image: not a bijection on {1..n}");
    seen[v] = true;
    p.img_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

std::vector<int> Permutation::image() const {
  return std::vector<int>(img_.begin(), img_.begin() + n_);
}

std::string Permutation::to_string() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (n_ > 9 && i > 0) s += ' ';
    s += std::to_string(static_cast<int>(img_[i]));
  }
  return s;
}

Permutation apply_gen(const Permutation& p, int i) {
  if (i < 1 || i >= p.size()) throw std::invalid_argument("apply_gen: generator index out of range");
  Permutation q = p;
  std::swap(q.img_[i - 1], q.img_[i]);
  return q;
}

Permutation apply_form(Permutation p, const Form& f) {
  for (int i : f) p = apply_gen(p, i);
  return p;
}

int parity(const Permutation& p) {
  const int n = p.size();
  int inv = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (p.at(a) > p.at(b)) ++inv;
  return inv & 1;
}

std::uint64_t lex_rank(const Permutation& p) {
  const int n = p.size();
  std::uint64_t r = 0;
  for (int a = 1; a <= n; ++a) {
    int smaller = 0;
    for (int b = a + 1; b <= n; ++b)
      if (p.at(b) < p.at(a)) ++smaller;
    r += static_cast<std::uint64_t>(smaller) * factorial(n - a);
  }
  return r;
}

Permutation lex_unrank(int n, std::uint64_t r) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("lex_unrank: n must be in [2, 12]");
  if (r >= factorial(n)) throw std::invalid_argument("lex_unrank: rank out of range");
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> image;
  image.reserve(n);
  for (int a = n - 1; a >= 0; --a) {
    const std::uint64_t f = factorial(a);
    const auto idx = static_cast<std::size_t>(r / f);
    r %= f;
    image.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation::from_image(image);
}

Form sjt_cycle(int n) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("sjt_cycle: n must be in [2, 12]");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::vector<int> dir(n + 1, -1);
  Form swaps;
  swaps.reserve(factorial(n));
  for (;;) {
    // largest mobile element: points at a smaller neighbour
    int mobile = 0, mpos = -1;
    for (int pos = 0; pos < n; ++pos) {
      const int val = perm[pos];
      const int np = pos + dir[val];
      if (np >= 0 && np < n && perm[np] < val && val > mobile) {
        mobile = val;
        mpos = pos;
      }
    }
    if (mobile == 0) break;
    const int d = dir[mobile];
    swaps.push_back(std::min(mpos, mpos + d) + 1);
    std::swap(perm[mpos], perm[mpos + d]);
    for (int v = mobile + 1; v <= n; ++v) dir[v] = -dir[v];
  }
  // the enumeration ends one b_1 step away from the start, so this closes it
  swaps.push_back(1);
  return swaps;
}

}  // namespace bsg
