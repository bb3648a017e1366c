#pragma once

// Exact maximum independent set by branch and bound over bit sets.
// The search runs as maximum clique on the complement ("compatible") graph
// with a greedy colouring bound; colour classes of the compatibility graph
// are cliques of the conflict graph, so this is a clique-cover bound.

#include <vector>

#include "widthforge/bits.hpp"

namespace widthforge::detail {

template <std::size_t W>
class IndependentSetSearch {
 public:
  using Set = Bits<W>;

  // compatible[v]: vertices that may share an independent set with v.
  explicit IndependentSetSearch(const std::vector<Set>& compatible) : compat_(compatible) {}

  // Size of a maximum independent set inside `candidates`. With a target,
  // stops as soon as an independent set of that size is found.
  int solve(const Set& candidates, int target = -1, Set* witness = nullptr) {
    best_ = 0;
    best_set_.clear();
    target_ = target;
    current_.clear();
    if (candidates.any()) {
      int greedy = greedy_lower_bound(candidates);
      (void)greedy;
      if (target_ < 0 || best_ < target_) expand(0, candidates);
    }
    if (witness) *witness = best_set_;
    return best_;
  }

 private:
  int greedy_lower_bound(Set p) {
    Set chosen;
    int size = 0;
    while (p.any()) {
      // minimum number of conflicts first: most compatible vertex
      int pick = -1, pick_deg = -1;
      for (int v = p.first(); v >= 0; v = p.next(v)) {
        int d = (compat_[v] & p).count();
        if (d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      chosen.set(pick);
      ++size;
      p &= compat_[pick];
    }
    if (size > best_) {
      best_ = size;
      best_set_ = chosen;
    }
    return size;
  }

  bool done() const { return target_ >= 0 && best_ >= target_; }

  void expand(int depth, Set p) {
    std::vector<int> order;
    std::vector<int> bound;
    order.reserve(static_cast<std::size_t>(p.count()));
    bound.reserve(order.capacity());
    {
      Set uncoloured = p;
      int colour = 0;
      while (uncoloured.any()) {
        ++colour;
        Set q = uncoloured;
        while (q.any()) {
          int v = q.first();
          q.reset(v);
          q = q.minus(compat_[v]);
          uncoloured.reset(v);
          order.push_back(v);
          bound.push_back(colour);
        }
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (depth + bound[i] <= best_ || done()) return;
      int v = order[i];
      current_.set(v);
      Set np = p & compat_[v];
      if (np.empty()) {
        if (depth + 1 > best_) {
          best_ = depth + 1;
          best_set_ = current_;
        }
      } else {
        expand(depth + 1, np);
      }
      current_.reset(v);
      p.reset(v);
    }
  }

  const std::vector<Set>& compat_;
  int best_ = 0;
  int target_ = -1;
  Set current_;
  Set best_set_;
};

// Lexicographically smallest (as a sorted index list) maximum independent
// set, given the optimum value.
template <std::size_t W>
Bits<W> lex_smallest_independent_set(const std::vector<Bits<W>>& compatible,
                                     const Bits<W>& candidates, int optimum) {
  IndependentSetSearch<W> search(compatible);
  Bits<W> chosen;
  Bits<W> avail = candidates;
  int need = optimum;
  for (int v = candidates.first(); v >= 0 && need > 0; v = candidates.next(v)) {
    if (!avail.test(v)) continue;
    avail.reset(v);
    Bits<W> rest = avail & compatible[v];
    if (need == 1 || search.solve(rest, need - 1) >= need - 1) {
      chosen.set(v);
      --need;
      avail = rest;
    }
  }
  return chosen;
}

// Calls fn.template operator()<W>() with the smallest word count able to
// hold `size` bits; returns false when size exceeds the largest supported.
template <class Fn>
auto dispatch_words(int size, Fn&& fn) {
  if (size <= 64) return fn.template operator()<1>();
  if (size <= 128) return fn.template operator()<2>();
  if (size <= 256) return fn.template operator()<4>();
  if (size <= 512) return fn.template operator()<8>();
  if (size <= 1024) return fn.template operator()<16>();
  return fn.template operator()<48>();
}

inline constexpr int kMaxCandidates = 64 * 48;

}  // namespace widthforge::detail
