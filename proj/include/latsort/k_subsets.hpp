#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace latsort {

/** Streams the k-element subsets of [1, n] in lexicographic order of the
    increasing index tuple, holding only the current tuple. k = 0 yields a
    single empty subset; the stream has C(n, k) items in total. */
class KSubsetStream {
 public:
  KSubsetStream(int n, int k) : n_(n), k_(k), done_(false) {
    if (n < 0 || k < 0 || k > n)
      throw std::invalid_argument("k_subsets requires 0 <= k <= n");
    indices_.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) indices_[static_cast<std::size_t>(i)] = i + 1;
  }

  bool done() const { return done_; }

  /** Current tuple (1-based, strictly increasing); valid while !done(). */
  std::span<const int> current() const { return indices_; }

  void advance() {
    // Bump the rightmost index that has room, reset the tail after it.
    int i = k_ - 1;
    while (i >= 0 && indices_[static_cast<std::size_t>(i)] == n_ - k_ + i + 1) --i;
    if (i < 0) {
      done_ = true;
      return;
    }
    ++indices_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k_; ++j)
      indices_[static_cast<std::size_t>(j)] = indices_[static_cast<std::size_t>(j - 1)] + 1;
  }

 private:
  int n_, k_;
  bool done_;
  std::vector<int> indices_;
};

/** Calls fn once per k-subset of [1, n], in lexicographic order. */
template <typename F>
void for_each_k_subset(int n, int k, F&& fn) {
  for (KSubsetStream s(n, k); !s.done(); s.advance()) fn(s.current());
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

}  // namespace latsort
